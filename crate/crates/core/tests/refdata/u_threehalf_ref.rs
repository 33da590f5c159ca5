// Tricomi U(a, 3/2, z) reference values generated offline at 40 digits.
pub const U_THREEHALF_REF: &[(f64, f64, f64)] = &[
    (1.2, 0.0001, 190.3381491059418),
    (1.2, 0.01, 16.823142724483965),
    (1.2, 0.1, 4.0500621167667905),
    (1.2, 1.0, 0.6444999717143519),
    (1.2, 5.0, 0.12662406289925657),
    (1.2, 10.0, 0.05857738769513243),
    (1.2, 20.0, 0.02640528809337869),
    (1.2, 30.0, 0.016437414366133253),
    (1.2, 50.0, 0.008997885676535224),
    (1.2, 100.0, 0.00394823870733866),
    (1.2, 200.0, 0.0017256511751998268),
    (1.2, 400.0, 0.0007526954230407018),
    (0.75, 0.0001, 143.67035085376375),
    (0.75, 0.01, 13.55406661372708),
    (0.75, 0.1, 3.7840812537037434),
    (0.75, 1.0, 0.8932779551393673),
    (0.75, 5.0, 0.2896527041237611),
    (0.75, 10.0, 0.17479977051735415),
    (0.75, 20.0, 0.10479517447426333),
    (0.75, 30.0, 0.07754066868163453),
    (0.75, 50.0, 0.05298771573844957),
    (0.75, 100.0, 0.031564119425792916),
    (0.75, 200.0, 0.018785483061311493),
    (0.75, 400.0, 0.011175113360113089),
    (0.25, 0.0001, 49.607825554593745),
    (0.25, 0.01, 5.58861346190496),
    (0.25, 0.1, 2.202234590133748),
    (0.25, 1.0, 1.047426241320841),
    (0.25, 5.0, 0.6764631120904807),
    (0.25, 10.0, 0.5657091101608411),
    (0.25, 20.0, 0.47431594434040486),
    (0.25, 30.0, 0.42816384602102686),
    (0.25, 50.0, 0.3765260885562494),
    (0.25, 100.0, 0.316424493818328),
    (0.25, 200.0, 0.2659976997228949),
    (0.25, 400.0, 0.22364169550210164),
    (-0.25, 0.0001, -35.421509457895),
    (-0.25, 0.01, -2.829655307241274),
    (-0.25, 0.1, -0.249612588742934),
    (-0.25, 1.0, 0.8241067525359993),
    (-0.25, 5.0, 1.4402043268744344),
    (-0.25, 10.0, 1.745229338586022),
    (-0.25, 20.0, 2.095006595095738),
    (-0.25, 30.0, 2.3257648005684413),
    (-0.25, 50.0, 2.649194576183092),
    (-0.25, 100.0, 3.1563539083268317),
    (-0.25, 200.0, 3.757079174316312),
    (-0.25, 400.0, 4.470040131702004),
    (-0.75, 0.0001, -37.56008426052426),
    (-0.75, 0.01, -4.474425627152848),
    (-0.75, 0.1, -1.7306103739081689),
    (-0.75, 1.0, 0.03853707154536846),
    (-0.75, 5.0, 2.713047442312702),
    (-0.75, 10.0, 5.0946179166603835),
    (-0.75, 20.0, 9.013417361633593),
    (-0.75, 30.0, 12.417615562712621),
    (-0.75, 50.0, 18.450239928599675),
    (-0.75, 100.0, 31.32622071290457),
    (-0.75, 200.0, 52.93362495748421),
    (-0.75, 400.0, 89.23307136241351),
    (-1.75, 0.0001, 66.16916031571509),
    (-1.75, 0.01, 8.139207504651115),
    (-1.75, 0.1, 2.9541751560833007),
    (-1.75, 1.0, -1.0590362443290255),
    (-1.75, 5.0, 4.791910717040579),
    (-1.75, 10.0, 35.1319731258469),
    (-1.75, 20.0, 152.78342394995195),
    (-1.75, 30.0, 334.87421658759604),
    (-1.75, 50.0, 866.8082834361633),
    (-1.75, 100.0, 3038.3467611887886),
    (-1.75, 200.0, 10427.674743780899),
    (-1.75, 400.0, 35425.31966678863),
    (-4.75, 0.0001, -3287.1973261882563),
    (-4.75, 0.01, -424.63001314788403),
    (-4.75, 0.1, -113.38683372885299),
    (-4.75, 1.0, 55.23515211850515),
    (-4.75, 5.0, 256.10413854804415),
    (-4.75, 10.0, -2327.0645204093526),
    (-4.75, 20.0, 271665.64655245113),
    (-4.75, 30.0, 3824491.2924833274),
    (-4.75, 50.0, 67702019.75873192),
    (-4.75, 100.0, 2434671928.7330594),
    (-4.75, 200.0, 74899210103.85518),
    (-4.75, 400.0, 2149805759754.72),
    (-9.75, 0.0001, 85715165.20189041),
    (-9.75, 0.01, 11356515.789728003),
    (-9.75, 0.1, 1147803.007304287),
    (-9.75, 1.0, 1547802.9085199628),
    (-9.75, 5.0, 4237390.505503613),
    (-9.75, 10.0, 57281636.39213429),
    (-9.75, 20.0, 5544905303.807839),
    (-9.75, 30.0, 25292521717.125954),
    (-9.75, 50.0, 2784688594134114.5),
    (-9.75, 100.0, 1.0393860434603524e+19),
    (-9.75, 200.0, 1.6100434200091785e+22),
    (-9.75, 400.0, 1.8150858500955705e+25),
    (-14.75, 0.0001, -28336520863024.94),
    (-14.75, 0.01, -3744475932709.9297),
    (-14.75, 0.1, 164651299644.64465),
    (-14.75, 1.0, -436405227332.8156),
    (-14.75, 5.0, 1328501359702.1624),
    (-14.75, 10.0, 2405677315102.145),
    (-14.75, 20.0, -1060556070885019.9),
    (-14.75, 30.0, -1.7078290170781366e+17),
    (-14.75, 50.0, 2.798298036886875e+21),
    (-14.75, 100.0, 2.1492915104897662e+28),
    (-14.75, 200.0, 2.5784486334133154e+33),
    (-14.75, 400.0, 1.3388707219107155e+38),
    (-19.75, 0.0001, 4.962906302832729e+19),
    (-19.75, 0.01, 6.446250318152275e+18),
    (-19.75, 0.1, -1.0429645555707937e+18),
    (-19.75, 1.0, -4.1400507149983245e+17),
    (-19.75, 5.0, 3.2840224458023245e+18),
    (-19.75, 10.0, -1.6499896142148289e+19),
    (-19.75, 20.0, 3.2575786905312003e+21),
    (-19.75, 30.0, -2.0064743528098335e+22),
    (-19.75, 50.0, 6.925861394157178e+27),
    (-19.75, 100.0, 1.6987729258305123e+37),
    (-19.75, 200.0, 2.9855613055867257e+44),
    (-19.75, 400.0, 8.578155380756581e+50),
    (-23.75, 0.0001, 1.2186742233997633e+25),
    (-23.75, 0.01, 1.550313037484637e+24),
    (-23.75, 0.1, -3.661206439421502e+23),
    (-23.75, 1.0, -2.465818708601292e+23),
    (-23.75, 5.0, -5.87079619377601e+23),
    (-23.75, 10.0, 1.0185270728655193e+24),
    (-23.75, 20.0, -3.78700802770457e+26),
    (-23.75, 30.0, 9.946429878807266e+28),
    (-23.75, 50.0, 1.9003428925379658e+33),
    (-23.75, 100.0, 7.903777398385898e+43),
    (-23.75, 200.0, 1.6355310280596983e+53),
    (-23.75, 400.0, 1.3576907995220416e+61),
];
