"""Published values used as regression fixtures.

Energies are in the units of the source tables (hbar = 1, M = 1 unless noted);
phase shifts in radians.  Entries are kept as printed, including a few
rows the underlying formulas cannot reproduce (see ``validation``).
"""

C0 = 0.0823058167837972

# (n, kappa, sigma0) -> roots; alpha = 0.1, M = 1
PSEUDOSPIN_ENERGY_COLUMNS = (
    {"D": 5.0, "C": 0.0},
    {"D": 10.0, "C": -5.0},
)
PSEUDOSPIN_ENERGIES = (
    (1, -1, 0.10, (2.279123264, 1.029346029), (2.123370278, -3.993494827)),
    (1, -1, 0.15, (1.861708247, 1.031128744), (1.321903847, -3.993385960)),
    (1, -1, 0.20, (1.595741034, 1.034060836), (0.841260815, -3.993229553)),
    (1, -1, 0.25, (1.409954493, 1.038900136), (0.513215975, -3.993021383)),
    (1, -2, 0.10, (2.499877239, 1.049281052), (2.396851228, -3.989095999)),
    (1, -2, 0.15, (2.038561413, 1.051746477), (1.492968827, -3.988960245)),
    (1, -2, 0.20, (1.734612780, 1.055761011), (0.958733145, -3.988765967)),
    (1, -2, 0.25, (1.518422511, 1.062286830), (0.598875815, -3.988508727)),
    (1, -3, 0.10, (2.698880956, 1.074337203), (2.742077063, -3.983652475)),
    (1, -3, 0.15, (2.214535196, 1.077721454), (1.721607908, -3.983480601)),
    (1, -3, 0.20, (1.879494431, 1.083211792), (1.120591256, -3.983235269)),
    (1, -3, 0.25, (1.634306621, 1.092094144), (0.719150716, -3.982911555)),
    (1, -4, 0.10, (2.860137540, 1.104783298), (3.119865055, -3.977163662)),
    (1, -4, 0.15, (2.371800955, 1.109339737), (1.987047112, -3.976948998)),
    (1, -4, 0.20, (2.015203200, 1.116738148), (1.314844872, -3.976643120)),
    (1, -4, 0.25, (1.745286576, 1.128746703), (0.866633979, -3.976240458)),
    (2, -1, 0.10, (2.615024144, 1.055156519), (3.119164186, -3.987967157)),
    (2, -1, 0.15, (2.170905660, 1.059554992), (2.174347963, -3.987685287)),
    (2, -1, 0.20, (1.854762182, 1.066940767), (1.576374701, -3.987279697)),
    (2, -1, 0.25, (1.610620539, 1.079632694), (1.152943758, -3.986738757)),
    (2, -2, 0.10, (2.751526391, 1.082577001), (3.308028013, -3.982028646)),
    (2, -2, 0.15, (2.286314037, 1.087870608), (2.296760801, -3.981727996)),
    (2, -2, 0.20, (1.948130591, 1.096737249), (1.662607037, -3.981295986)),
    (2, -2, 0.25, (1.684753900, 1.111945302), (1.217121129, -3.980720876)),
    (2, -3, 0.10, (2.880207106, 1.115665997), (3.556476381, -3.975030556)),
    (2, -3, 0.15, (2.407058769, 1.122328052), (2.465317807, -3.974688096)),
    (2, -3, 0.20, (2.050146916, 1.133485527), (1.784093810, -3.974197233)),
    (2, -3, 0.25, (1.766570973, 1.152692476), (1.308784059, -3.973545930)),
    (2, -4, 0.10, (2.984654813, 1.154764895), (3.839051072, -3.966978840)),
    (2, -4, 0.15, (2.516213585, 1.163231610), (2.667142308, -3.966583110)),
    (2, -4, 0.20, (2.146431337, 1.177478350), (1.933530119, -3.966017016)),
    (2, -4, 0.25, (1.843996674, 1.202334754), (1.423425408, -3.965267870)),
)

# (n, kappa, sigma0) -> roots; alpha = 0.1, D = 10, M = 1
SPIN_ENERGY_COLUMNS = (
    {"D": 10.0, "C": 0.0},
    {"D": 10.0, "C": 5.0},
)
SPIN_ENERGIES = (
    (0, -2, 0.10, (2.852748850, -0.997190645), (4.894455875, 4.004884016)),
    (0, -2, 0.15, (2.286237200, -0.997160056), (4.484630891, 4.005026090)),
    (0, -2, 0.20, (1.976219709, -0.997116299), (4.291441866, 4.005242281)),
    (0, -2, 0.25, (1.777900928, -0.997058390), (4.186232796, 4.005555499)),
    (0, -3, 0.10, (3.349197922, -0.994101445), (5.374102366, 4.010243686)),
    (0, -3, 0.15, (2.597824107, -0.994048465), (4.789547550, 4.010499561)),
    (0, -3, 0.20, (2.189987655, -0.993972934), (4.496203764, 4.010885663)),
    (0, -3, 0.25, (1.933180571, -0.993873429), (4.328714233, 4.011438071)),
    (0, -4, 0.10, (3.898927388, -0.989885456), (5.855300432, 4.017565178)),
    (0, -4, 0.15, (2.970569858, -0.989803165), (5.119359731, 4.017971982)),
    (0, -4, 0.20, (2.458487266, -0.989686044), (4.729675556, 4.018583410)),
    (0, -4, 0.25, (2.134995974, -0.989532099), (4.497834585, 4.019453088)),
    (0, -5, 0.10, (4.444897842, -0.984540394), (6.309088175, 4.026860903)),
    (0, -5, 0.15, (3.364895150, -0.984421967), (5.450837766, 4.027456271)),
    (0, -5, 0.20, (2.754447857, -0.984253582), (4.974848046, 4.028349215)),
    (0, -5, 0.25, (2.364312495, -0.984032549), (4.681673312, 4.029615355)),
    (1, -2, 0.10, (4.307215786, -0.992940748), (5.855244196, 4.012347926)),
    (1, -2, 0.15, (3.494784849, -0.992807827), (5.188936272, 4.012901328)),
    (1, -2, 0.20, (3.001592356, -0.992615929), (4.804784938, 4.013761503)),
    (1, -2, 0.25, (2.661226629, -0.992358819), (4.556938740, 4.015047441)),
    (1, -3, 0.10, (4.595818435, -0.988170213), (6.178579520, 4.020644486)),
    (1, -3, 0.15, (3.680400729, -0.988003000), (5.414210564, 4.021381830)),
    (1, -3, 0.20, (3.132061101, -0.987762645), (4.970596099, 4.022516492)),
    (1, -3, 0.25, (2.758336616, -0.987442474), (4.682895638, 4.024188218)),
    (1, -4, 0.10, (4.953368438, -0.982265799), (6.534179272, 4.030932630)),
    (1, -4, 0.15, (3.924033854, -0.982052870), (5.675017706, 4.031906704)),
    (1, -4, 0.20, (3.308761019, -0.981747682), (5.167809668, 4.033396291)),
    (1, -4, 0.25, (2.892498344, -0.981342717), (4.835280862, 4.035570778)),
    (1, -5, 0.10, (5.338258842, -0.975226530), (6.885351175, 4.043223541)),
    (1, -5, 0.15, (4.201954406, -0.974959459), (5.945777082, 4.044479104)),
    (1, -5, 0.20, (3.517066442, -0.974577405), (5.378157524, 4.046391514)),
    (1, -5, 0.25, (3.054118376, -0.974071753), (5.000762561, 4.049166887)),
)

# (n, l, label, sigma0) -> E for alpha = 0.10, 0.15, 0.20, 0.25; D = 10, mu = 1
NONREL_ALPHAS = (0.10, 0.15, 0.20, 0.25)
NONREL_ENERGIES = (
    (0, 1, "2p", 0.10, (2.61886, 3.90571, 5.00379, 5.88669)),
    (0, 1, "2p", 0.15, (1.68039, 2.57787, 3.43316, 4.20997)),
    (0, 1, "2p", 0.20, (1.20888, 1.86663, 2.52048, 3.14740)),
    (1, 1, "3p", 0.10, (4.73552, 6.04570, 6.91711, 7.48475)),
    (1, 1, "3p", 0.15, (3.46026, 4.62307, 5.50067, 6.15044)),
    (1, 1, "3p", 0.20, (2.68320, 3.67154, 4.46564, 5.09305)),
    (0, 2, "3d", 0.10, (3.62734, 5.29485, 6.47635, 7.25747)),
    (0, 2, "3d", 0.15, (2.27011, 3.56704, 4.69665, 5.59830)),
    (0, 2, "3d", 0.20, (1.57908, 2.54853, 3.48262, 4.31329)),
    (2, 1, "4p", 0.10, (6.00299, 7.11553, 7.71951, 8.02106)),
    (2, 1, "4p", 0.15, (4.66770, 5.80657, 6.52463, 6.95731)),
    (2, 1, "4p", 0.20, (3.75704, 4.81242, 5.53159, 6.00361)),
    (1, 2, "4d", 0.10, (5.33164, 6.73663, 7.54623, 7.97844)),
    (1, 2, "4d", 0.15, (3.85813, 5.19480, 6.13553, 6.75588)),
    (1, 2, "4d", 0.20, (2.95293, 4.10491, 5.00322, 5.66533)),
    (0, 3, "4f", 0.10, (4.69036, 6.43153, 7.43683, 7.97990)),
    (0, 3, "4f", 0.15, (3.00341, 4.60144, 5.79817, 6.60873)),
    (0, 3, "4f", 0.20, (2.07413, 3.35783, 4.47694, 5.35270)),
)

# (l, kappa) -> delta for -kappa (first) and +kappa (second) per column;
# sigma0 = alpha = 0.10, D = 10, E = M = 1
PSEUDOSPIN_PHASE_SETUP = {"D": 10.0, "sigma0": 0.10, "alpha": 0.10, "E": 1.0, "M": 1.0}
PSEUDOSPIN_PHASE_COLUMNS = (0.0, 0.05)
PSEUDOSPIN_PHASES = (
    (0, 1, (1.523874403924851, 1.570796326794897), (-8.078248081182888, -6.037944299866905)),
    (0, 2, (0.458609436071745, 1.523874403924851), (-9.297898988297444, -8.078248081182888)),
    (0, 3, (-1.072342966122305, 0.458609436071745), (-9.919223591558044, -9.297898988297444)),
    (0, 4, (-2.932321514421307, -1.072342966122305), (-10.040884779950039, -9.919223591558044)),
    (0, 5, (-5.047233964874891, -2.932321514421307), (-9.667030052888922, -10.040884779950039)),
    (1, 1, (3.094670730719748, 3.141592653589793), (-6.507451754387993, -4.467147973072009)),
    (1, 2, (2.029405762866642, 3.094670730719748), (-7.727102661502547, -6.507451754387993)),
    (1, 3, (0.498453360672592, 2.029405762866642), (-8.348427264763147, -7.727102661502547)),
    (1, 4, (-1.361525187626411, 0.498453360672592), (-8.470088453155141, -8.348427264763147)),
    (1, 5, (-3.476437638079995, -1.361525187626411), (-8.096233726094024, -8.470088453155141)),
    (2, 1, (4.665467057514643, 4.712388980384690), (-4.936655427593096, -2.896351646277112)),
    (2, 2, (3.600202089661539, 4.665467057514643), (-6.156306334707651, -4.936655427593096)),
    (2, 3, (2.069249687467488, 3.600202089661539), (-6.777630937968251, -6.156306334707651)),
    (2, 4, (0.209271139168486, 2.069249687467488), (-6.899292126360244, -6.777630937968251)),
    (2, 5, (-1.905641311285098, 0.209271139168486), (-6.525437399299129, -6.899292126360244)),
    (3, 1, (6.236263384309540, 6.283185307179586), (-3.365859100798200, -1.32555319482215)),
    (3, 2, (5.170998416456435, 6.236263384309540), (-4.585510007912754, -3.365859100798200)),
    (3, 3, (3.640046014262385, 5.170998416456435), (-5.206834611173354, -4.585510007912754)),
    (3, 4, (1.780067465963383, 3.640046014262385), (-5.328495799565348, -5.206834611173354)),
    (3, 5, (-0.334844984490202, 1.780067465963383), (-4.954641072504233, -5.328495799565348)),
)

# same layout; sigma0 = alpha = 0.50, D = 10, E = M = 1
SPIN_PHASE_SETUP = {"D": 10.0, "sigma0": 0.50, "alpha": 0.50, "E": 1.0, "M": 1.0}
SPIN_PHASE_COLUMNS = (5.0, 10.0)
SPIN_PHASES = (
    (0, 1, (-15.357449458632775, -15.180768491483812), (-34.356717558868027, -34.213439256222195)),
    (0, 2, (-15.180768491483812, -14.812590524986316), (-34.213439256222195, -33.922995271131597)),
    (0, 3, (-14.812590524986316, -14.223834178887669), (-33.922995271131597, -33.477658101510812)),
    (0, 4, (-14.223834178887669, -13.370909470812821), (-33.477658101510812, -32.865901014031351)),
    (0, 5, (-13.370909470812821, -12.192227544491045), (-32.865901014031351, -32.072333895105686)),
    (1, 1, (-13.786653131837877, -13.609972164688918), (-32.785921232073129, -32.642642929427303)),
    (1, 2, (-13.609972164688918, -13.241794198191421), (-32.642642929427303, -32.352198944336699)),
    (1, 3, (-13.241794198191421, -12.653037852092771), (-32.352198944336699, -31.906861774715914)),
    (1, 4, (-12.653037852092771, -11.800113144017923), (-31.906861774715914, -31.295104687236456)),
    (1, 5, (-11.800113144017923, -10.621431217696150), (-31.295104687236456, -30.501537568310784)),
    (2, 1, (-10.645060478248087, -10.468379511099124), (-31.215124905278238, -31.071846602632405)),
    (2, 2, (-10.468379511099124, -10.100201544601624), (-31.071846602632405, -30.781402617541801)),
    (2, 3, (-10.100201544601624, -9.5114451985029810), (-30.781402617541801, -30.336065447921015)),
    (2, 4, (-9.5114451985029810, -8.6585204904281290), (-30.336065447921015, -29.724308360441558)),
    (2, 5, (-8.6585204904281290, -7.4798385641063540), (-29.724308360441558, -28.930741241515886)),
    (3, 1, (-10.645060478248087, -10.468379511099124), (-29.644328578483339, -29.501050275837507)),
    (3, 2, (-10.468379511099124, -10.100201544601624), (-29.501050275837507, -29.210606290746910)),
    (3, 3, (-10.100201544601624, -9.5114451985029810), (-29.210606290746910, -28.765269121126117)),
    (3, 4, (-9.5114451985029810, -8.6585204904281290), (-28.765269121126117, -28.153512033646667)),
    (3, 5, (-8.6585204904281290, -7.4798385641063540), (-28.153512033646667, -27.359944914720987)),
)
