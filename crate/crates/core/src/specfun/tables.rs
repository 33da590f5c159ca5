// Generated offline at 60-digit precision.

/// Chebyshev coefficients of 1/Gamma(1.5 + t/2) on t in [-1, 1],
/// stored as (hi, lo) double-double pairs.
pub(crate) const RGAMMA_CHEB: &[(f64, f64)] = &[
    (1.063773007805262, -9.638063860066539e-17),
    (-0.004985587286840036, -1.916954193249186e-19),
    (-0.06419254361091582, -2.6491489780707126e-19),
    (0.005065798640286087, 2.509723026894507e-19),
    (0.0004166091387096889, -2.0575476877562433e-20),
    (-8.048141249784711e-05, -5.258190357093304e-21),
    (2.960011775188017e-06, 1.36136618429805e-22),
    (2.6897599644059546e-07, 2.1994740804217698e-23),
    (-3.3396463068683694e-08, -7.145774670520826e-25),
    (1.0896538645441867e-09, -5.97509076342876e-26),
    (5.13850186324227e-11, 2.099754704467618e-29),
    (-6.600741004112952e-12, -1.6953670267386761e-28),
    (2.4769163034825414e-13, -1.2110939920557348e-29),
    (2.2003907817225954e-15, 1.0102358599648233e-31),
    (-6.707186064779082e-16, -2.1763463249614855e-32),
    (3.1317345823123396e-17, 2.6390067887973583e-36),
    (-3.9466113257658343e-19, -2.4778770964990802e-36),
    (-3.2296265464815875e-20, 2.9102258417580226e-36),
    (2.1670553641150255e-21, 1.4736356656851427e-37),
    (-5.666929449360016e-23, 1.9728768862341527e-39),
    (-2.219316520514558e-25, -1.3547001384886615e-41),
    (7.825754258650393e-26, 5.132252329967608e-42),
    (-3.146014974662976e-27, 7.023110159910218e-45),
    (5.08967772391718e-29, 1.9903105937859994e-45),
    (9.94177959407874e-31, -1.5893190282404661e-47),
    (-8.70657629354987e-32, 7.489557155655759e-49),
    (2.5624000198034964e-33, 9.890373272735915e-50),
    (-2.718330244657005e-35, -1.996614010394792e-51),
    (-9.634881514299345e-37, -6.177692598888189e-53),
    (5.54606754312697e-38, 2.9512549949456257e-54),
];

/// Signed coefficients 1/(2k+1)! of the sine Taylor series, (hi, lo) pairs.
pub(crate) const SIN_ODD: &[(f64, f64)] = &[
    (1.0, 0.0),
    (-0.16666666666666666, -9.25185853854297e-18),
    (0.008333333333333333, 1.1564823173178714e-19),
    (-0.0001984126984126984, -1.7209558293420705e-22),
    (2.7557319223985893e-06, -1.858393274046472e-22),
    (-2.505210838544172e-08, 1.448814070935912e-24),
    (1.6059043836821613e-10, 1.2585294588752098e-26),
    (-7.647163731819816e-13, -7.03872877733453e-30),
    (2.8114572543455206e-15, 1.6508842730861433e-31),
    (-8.22063524662433e-18, -2.2141894119604265e-34),
    (1.9572941063391263e-20, -1.3643503830087908e-36),
    (-3.868170170630684e-23, 8.843177655482344e-40),
    (6.446950284384474e-26, -1.9330404233703465e-42),
    (-9.183689863795546e-29, -1.4303150396787322e-45),
    (1.1309962886447716e-31, 1.0498015412959506e-47),
    (-1.216125041553518e-34, -5.586290567888806e-51),
    (1.151633562077195e-37, -6.09957445788454e-54),
    (-9.67759295863189e-41, -3.202295548645562e-57),
    (7.265460179153071e-44, -4.364097149354446e-61),
    (-4.902469756513544e-47, 1.213019100517928e-63),
];

pub(crate) const PI_DD: (f64, f64) = (3.141592653589793, 1.2246467991473532e-16);
pub(crate) const SQRT_PI_DD: (f64, f64) = (1.772453850905516, -7.666586499825799e-17);
