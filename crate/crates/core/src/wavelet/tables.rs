//! Embedded filter coefficient tables.
//!
//! Values are the standard published tables as distributed with PyWavelets
//! (Daubechies, symlet and spline-biorthogonal families), in convolution
//! order: low-pass decomposition filter first tap first. Biorthogonal pairs
//! are zero-padded to a common length, which fixes their relative alignment.
//! The symlet tables were refined by Newton iteration on their defining
//! equations (low-pass sum, double-shift orthogonality, vanishing moments),
//! which moves each tap by at most 4e-12 and brings the identities to
//! double precision. Every table is checked against the filter-bank
//! identities before use.

use std::f64::consts::FRAC_1_SQRT_2;

/// Daubechies 2, 4 taps.
pub(super) const DB2_LO: [f64; 4] = [
    -0.12940952255126037,
    0.2241438680420134,
    0.8365163037378079,
    0.48296291314453416,
];

/// Daubechies 3, 6 taps.
pub(super) const DB3_LO: [f64; 6] = [
    0.03522629188570953,
    -0.08544127388202666,
    -0.13501102001025458,
    0.45987750211849154,
    0.8068915093110925,
    0.33267055295008263,
];

/// Daubechies 4, 8 taps.
pub(super) const DB4_LO: [f64; 8] = [
    -0.010597401785069032,
    0.0328830116668852,
    0.030841381835560764,
    -0.18703481171909309,
    -0.027983769416859854,
    0.6308807679298589,
    0.7148465705529157,
    0.2303778133088965,
];

/// Daubechies 5, 10 taps.
pub(super) const DB5_LO: [f64; 10] = [
    0.0033357252854737712,
    -0.012580751999081999,
    -0.006241490212798274,
    0.07757149384004572,
    -0.032244869584638375,
    -0.24229488706638203,
    0.13842814590132074,
    0.7243085284377729,
    0.6038292697971896,
    0.16010239797419293,
];

/// Daubechies 6, 12 taps.
pub(super) const DB6_LO: [f64; 12] = [
    -0.0010773010853084796,
    0.004777257510945511,
    0.0005538422011614961,
    -0.03158203931748603,
    0.027522865530305727,
    0.09750160558732304,
    -0.12976686756726194,
    -0.22626469396543983,
    0.31525035170919763,
    0.7511339080210954,
    0.49462389039845306,
    0.11154074335010947,
];

/// Daubechies 7, 14 taps.
pub(super) const DB7_LO: [f64; 14] = [
    0.00035371379997452024,
    -0.0018016407040474908,
    0.0004295779729213665,
    0.01255099855609984,
    -0.01657454163066688,
    -0.03802993693501441,
    0.08061260915108308,
    0.07130921926683026,
    -0.22403618499387498,
    -0.14390600392856498,
    0.4697822874051931,
    0.7291320908462351,
    0.3965393194819173,
    0.07785205408500918,
];

/// Daubechies 8, 16 taps.
pub(super) const DB8_LO: [f64; 16] = [
    -0.00011747678412476953,
    0.0006754494064505693,
    -0.00039174037337694705,
    -0.004870352993451574,
    0.008746094047405777,
    0.013981027917398282,
    -0.044088253930794755,
    -0.017369301001807547,
    0.12874742662047847,
    0.0004724845739132828,
    -0.2840155429615469,
    -0.015829105256349306,
    0.5853546836542067,
    0.6756307362972898,
    0.31287159091429995,
    0.05441584224310401,
];

/// Daubechies 9, 18 taps.
pub(super) const DB9_LO: [f64; 18] = [
    3.93473203162716e-05,
    -0.0002519631889427101,
    0.00023038576352319597,
    0.0018476468830562265,
    -0.00428150368246343,
    -0.004723204757751397,
    0.022361662123679096,
    0.00025094711483145197,
    -0.06763282906132997,
    0.03072568147933338,
    0.14854074933810638,
    -0.09684078322297646,
    -0.2932737832791749,
    0.13319738582500756,
    0.6572880780513005,
    0.6048231236901112,
    0.24383467461259034,
    0.038077947363878345,
];

/// Daubechies 10, 20 taps.
pub(super) const DB10_LO: [f64; 20] = [
    -1.3264202894521244e-05,
    9.358867032006959e-05,
    -0.00011646685512928545,
    -0.0006858566949597116,
    0.001992405295185056,
    0.001395351747052901,
    -0.010733175483330575,
    0.0036065535669561697,
    0.033212674059341,
    -0.029457536821875813,
    -0.07139414716639708,
    0.09305736460357235,
    0.12736934033579325,
    -0.19594627437737705,
    -0.24984642432731538,
    0.2811723436605775,
    0.6884590394536035,
    0.5272011889317256,
    0.1881768000776915,
    0.026670057900555554,
];

/// Symlet 2, 4 taps.
pub(super) const SYM2_LO: [f64; 4] = [
    -0.12940952255126037,
    0.2241438680420134,
    0.8365163037378079,
    0.48296291314453416,
];

/// Symlet 3, 6 taps.
pub(super) const SYM3_LO: [f64; 6] = [
    0.03522629188570953,
    -0.08544127388202666,
    -0.13501102001025458,
    0.45987750211849154,
    0.8068915093110925,
    0.33267055295008263,
];

/// Symlet 4, 8 taps.
pub(super) const SYM4_LO: [f64; 8] = [
    -0.07576571478950221,
    -0.029635527646002493,
    0.497618667632775,
    0.8037387518051321,
    0.29785779560530606,
    -0.09921954357663353,
    -0.012603967262031304,
    0.032223100604051466,
];

/// Symlet 5, 10 taps.
pub(super) const SYM5_LO: [f64; 10] = [
    0.027333068344998768,
    0.02951949092570626,
    -0.039134249302313844,
    0.19939753397685558,
    0.7234076904040407,
    0.633978963456792,
    0.01660210576451085,
    -0.17532808990805623,
    -0.021101834024689042,
    0.019538882735249827,
];

/// Symlet 6, 12 taps.
pub(super) const SYM6_LO: [f64; 12] = [
    0.015404109327044824,
    0.0034907120842221626,
    -0.11799011114852002,
    -0.04831174258569806,
    0.49105594192797375,
    0.787641141028651,
    0.3379294217281658,
    -0.07263752278637658,
    -0.02106029251237085,
    0.04472490177078139,
    0.0017677118642540077,
    -0.00780070832503238,
];

/// Symlet 7, 14 taps.
pub(super) const SYM7_LO: [f64; 14] = [
    0.002681814568260147,
    -0.001047384888679738,
    -0.012636303403240567,
    0.030515513165877885,
    0.06789269350122057,
    -0.04955283493704283,
    0.017441255086835708,
    0.5361019170905692,
    0.7677643170048829,
    0.2886296317506479,
    -0.14004724044293365,
    -0.10780823770328972,
    0.0040102448715223955,
    0.010268176708464817,
];

/// Symlet 8, 16 taps.
pub(super) const SYM8_LO: [f64; 16] = [
    -0.0033824159510050028,
    -0.0005421323318000107,
    0.03169508781152599,
    0.007607487324976609,
    -0.14329423835127267,
    -0.061273359067811076,
    0.4813596512590534,
    0.777185751699628,
    0.36444189483617895,
    -0.0519458381078818,
    -0.027219029917103486,
    0.04913717967373029,
    0.0038087520138944896,
    -0.014952258337062199,
    -0.0003029205147241331,
    0.001889950332767689,
];

/// Spline biorthogonal 1.1, analysis low-pass.
pub(super) const BIOR11_DEC_LO: [f64; 2] = [FRAC_1_SQRT_2, FRAC_1_SQRT_2];

/// Spline biorthogonal 1.1, synthesis low-pass.
pub(super) const BIOR11_REC_LO: [f64; 2] = [FRAC_1_SQRT_2, FRAC_1_SQRT_2];

/// Spline biorthogonal 1.3, analysis low-pass.
pub(super) const BIOR13_DEC_LO: [f64; 6] = [
    -0.08838834764831845,
    0.08838834764831845,
    FRAC_1_SQRT_2,
    FRAC_1_SQRT_2,
    0.08838834764831845,
    -0.08838834764831845,
];

/// Spline biorthogonal 1.3, synthesis low-pass.
pub(super) const BIOR13_REC_LO: [f64; 6] = [0.0, 0.0, FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0, 0.0];

/// Spline biorthogonal 1.5, analysis low-pass.
pub(super) const BIOR15_DEC_LO: [f64; 10] = [
    0.016572815184059706,
    -0.016572815184059706,
    -0.12153397801643785,
    0.12153397801643785,
    FRAC_1_SQRT_2,
    FRAC_1_SQRT_2,
    0.12153397801643785,
    -0.12153397801643785,
    -0.016572815184059706,
    0.016572815184059706,
];

/// Spline biorthogonal 1.5, synthesis low-pass.
pub(super) const BIOR15_REC_LO: [f64; 10] = [
    0.0,
    0.0,
    0.0,
    0.0,
    FRAC_1_SQRT_2,
    FRAC_1_SQRT_2,
    0.0,
    0.0,
    0.0,
    0.0,
];

/// Spline biorthogonal 2.2, analysis low-pass.
pub(super) const BIOR22_DEC_LO: [f64; 6] = [
    0.0,
    -0.1767766952966369,
    0.3535533905932738,
    1.0606601717798212,
    0.3535533905932738,
    -0.1767766952966369,
];

/// Spline biorthogonal 2.2, synthesis low-pass.
pub(super) const BIOR22_REC_LO: [f64; 6] = [
    0.0,
    0.3535533905932738,
    FRAC_1_SQRT_2,
    0.3535533905932738,
    0.0,
    0.0,
];

/// Spline biorthogonal 3.5, analysis low-pass.
pub(super) const BIOR35_DEC_LO: [f64; 12] = [
    -0.013810679320049757,
    0.04143203796014927,
    0.052480581416189075,
    -0.26792717880896527,
    -0.07181553246425873,
    0.966747552403483,
    0.966747552403483,
    -0.07181553246425873,
    -0.26792717880896527,
    0.052480581416189075,
    0.04143203796014927,
    -0.013810679320049757,
];

/// Spline biorthogonal 3.5, synthesis low-pass.
pub(super) const BIOR35_REC_LO: [f64; 12] = [
    0.0,
    0.0,
    0.0,
    0.0,
    0.1767766952966369,
    0.5303300858899106,
    0.5303300858899106,
    0.1767766952966369,
    0.0,
    0.0,
    0.0,
    0.0,
];
