//! Monomial tables for the recurrence-coefficient polynomials.
//!
//! Each table lists terms `(pow_t, pow_m, pow_k, coeff)` of a polynomial
//! in (t, m, k) with t = 2α, over the common denominator `2^denom_log2`.
//! Generated once from the validated closed forms; do not edit by hand.

/// One expanded polynomial in (2α, m, k) with power-of-two denominator.
pub(crate) struct KPolyTable {
    pub denom_log2: u32,
    pub terms: &'static [(u8, u8, u8, i64)],
}

pub(crate) static G1_TABLE: KPolyTable = KPolyTable {
    denom_log2: 0,
    terms: &[
        (0, 0, 7, -2), (2, 0, 5, 4), (1, 1, 5, 17), (1, 0, 5, 8), (0, 2, 5, 17), (0, 1, 5, 17),
        (0, 0, 5, 30), (2, 0, 4, 9), (1, 1, 4, 42), (1, 0, 4, 18), (0, 2, 4, 42), (0, 1, 4, 42),
        (0, 0, 4, 12), (4, 0, 3, -2), (3, 1, 3, -17), (3, 0, 3, -8), (2, 2, 3, -53),
        (2, 1, 3, -51), (2, 0, 3, -31), (1, 3, 3, -72), (1, 2, 3, -106), (1, 1, 3, -116),
        (1, 0, 3, -46), (0, 4, 3, -36), (0, 3, 3, -72), (0, 2, 3, -118), (0, 1, 3, -82),
        (0, 0, 3, -78), (4, 0, 2, -9), (3, 1, 2, -78), (3, 0, 2, -36), (2, 2, 2, -246),
        (2, 1, 2, -234), (2, 0, 2, -63), (1, 3, 2, -336), (1, 2, 2, -492), (1, 1, 2, -264),
        (1, 0, 2, -54), (0, 4, 2, -168), (0, 3, 2, -336), (0, 2, 2, -276), (0, 1, 2, -108),
        (4, 0, 1, -7), (3, 1, 1, -67), (3, 0, 1, -28), (2, 2, 1, -223), (2, 1, 1, -201),
        (2, 0, 1, 15), (1, 3, 1, -312), (1, 2, 1, -446), (1, 1, 1, 27), (1, 0, 1, 86),
        (0, 4, 1, -156), (0, 3, 1, -312), (0, 2, 1, 5), (0, 1, 1, 161), (0, 0, 1, 50),
        (4, 0, 0, 6), (3, 1, 0, 42), (3, 0, 0, 24), (2, 2, 0, 114), (2, 1, 0, 126),
        (2, 0, 0, 18), (1, 3, 0, 144), (1, 2, 0, 228), (1, 1, 0, 54), (1, 0, 0, -12),
        (0, 4, 0, 72), (0, 3, 0, 144), (0, 2, 0, 42), (0, 1, 0, -30), (0, 0, 0, -12),
    ],
};

pub(crate) static G2_TABLE: KPolyTable = KPolyTable {
    denom_log2: 1,
    terms: &[
        (0, 0, 9, -8), (0, 0, 8, 8), (2, 0, 7, 14), (1, 1, 7, 36), (1, 0, 7, 28), (0, 2, 7, 36),
        (0, 1, 7, 36), (0, 0, 7, 72), (2, 0, 6, 22), (1, 1, 6, 156), (1, 0, 6, 44),
        (0, 2, 6, 156), (0, 1, 6, 156), (0, 0, 6, 24), (4, 0, 5, -4), (3, 1, 5, 9),
        (3, 0, 5, -16), (2, 2, 5, 117), (2, 1, 5, 27), (2, 0, 5, -60), (1, 3, 5, 216),
        (1, 2, 5, 234), (1, 1, 5, -6), (1, 0, 5, -88), (0, 4, 5, 108), (0, 3, 5, 216),
        (0, 2, 5, 84), (0, 1, 5, -24), (0, 0, 5, -120), (4, 0, 4, -27), (3, 1, 4, -249),
        (3, 0, 4, -108), (2, 2, 4, -789), (2, 1, 4, -747), (2, 0, 4, -176), (1, 3, 4, -1080),
        (1, 2, 4, -1578), (1, 1, 4, -954), (1, 0, 4, -136), (0, 4, 4, -540), (0, 3, 4, -1080),
        (0, 2, 4, -996), (0, 1, 4, -456), (0, 0, 4, -72), (6, 0, 3, -2), (5, 1, 3, -45),
        (5, 0, 3, -12), (4, 2, 3, -315), (4, 1, 3, -225), (4, 0, 3, -51), (3, 3, 3, -1026),
        (3, 2, 3, -1260), (3, 1, 3, -741), (3, 0, 3, -124), (2, 4, 3, -1728), (2, 3, 3, -3078),
        (2, 2, 3, -3003), (2, 1, 3, -1323), (2, 0, 3, -86), (1, 5, 3, -1458), (1, 4, 3, -3456),
        (1, 3, 3, -4722), (1, 2, 3, -3486), (1, 1, 3, -798), (1, 0, 3, 44), (0, 6, 3, -486),
        (0, 5, 3, -1458), (0, 4, 3, -2550), (0, 3, 3, -2670), (0, 2, 3, -1128), (0, 1, 3, -36),
        (0, 0, 3, 56), (6, 0, 2, -3), (5, 1, 2, -69), (5, 0, 2, -18), (4, 2, 2, -501),
        (4, 1, 2, -345), (4, 0, 2, -33), (3, 3, 2, -1674), (3, 2, 2, -2004), (3, 1, 2, -471),
        (3, 0, 2, -12), (2, 4, 2, -2862), (2, 3, 2, -5022), (2, 2, 2, -2079), (2, 1, 2, -33),
        (2, 0, 2, 58), (1, 5, 2, -2430), (1, 4, 2, -5724), (1, 3, 2, -3606), (1, 2, 2, -150),
        (1, 1, 2, 486), (1, 0, 2, 92), (0, 6, 2, -810), (0, 5, 2, -2430), (0, 4, 2, -2154),
        (0, 3, 2, -258), (0, 2, 2, 600), (0, 1, 2, 324), (0, 0, 2, 40), (6, 0, 1, -1),
        (5, 0, 1, -6), (4, 2, 1, 30), (4, 0, 1, -5), (3, 3, 1, 114), (3, 2, 1, 120),
        (3, 1, 1, 60), (3, 0, 1, 20), (2, 4, 1, 192), (2, 3, 1, 342), (2, 2, 1, 330),
        (2, 1, 1, 180), (2, 0, 1, 36), (1, 5, 1, 162), (1, 4, 1, 384), (1, 3, 1, 522),
        (1, 2, 1, 420), (1, 1, 1, 144), (1, 0, 1, 16), (0, 6, 1, 54), (0, 5, 1, 162),
        (0, 4, 1, 282), (0, 3, 1, 294), (0, 2, 1, 144), (0, 1, 1, 24), (5, 1, 0, 6),
        (4, 2, 0, 54), (4, 1, 0, 30), (3, 3, 0, 186), (3, 2, 0, 216), (3, 1, 0, 48),
        (2, 4, 0, 318), (2, 3, 0, 558), (2, 2, 0, 240), (2, 1, 0, 24), (1, 5, 0, 270),
        (1, 4, 0, 636), (1, 3, 0, 414), (1, 2, 0, 48), (1, 1, 0, -24), (0, 6, 0, 90),
        (0, 5, 0, 270), (0, 4, 0, 246), (0, 3, 0, 42), (0, 2, 0, -48), (0, 1, 0, -24),
    ],
};

pub(crate) static G3_TABLE: KPolyTable = KPolyTable {
    denom_log2: 4,
    terms: &[
        (0, 0, 11, 32), (0, 0, 10, -192), (2, 0, 9, -80), (1, 1, 9, -144), (1, 0, 9, -160),
        (0, 2, 9, -144), (0, 1, 9, -144), (0, 0, 9, 256), (2, 0, 8, 432), (1, 1, 8, 768),
        (1, 0, 8, 864), (0, 2, 8, 768), (0, 1, 8, 768), (0, 0, 8, 576), (4, 0, 7, 66),
        (3, 1, 7, 216), (3, 0, 7, 264), (2, 2, 7, 216), (2, 1, 7, 648), (2, 0, 7, -264),
        (1, 2, 7, 432), (1, 1, 7, -480), (1, 0, 7, -1056), (0, 2, 7, -912), (0, 1, 7, -912),
        (0, 0, 7, -1728), (4, 0, 6, -300), (3, 1, 6, -1008), (3, 0, 6, -1200), (2, 2, 6, -1008),
        (2, 1, 6, -3024), (2, 0, 6, -2160), (1, 2, 6, -2016), (1, 1, 6, -3744), (1, 0, 6, -1920),
        (0, 2, 6, -1728), (0, 1, 6, -1728), (0, 0, 6, 576), (6, 0, 5, -20), (5, 1, 5, -81),
        (5, 0, 5, -120), (4, 2, 5, -81), (4, 1, 5, -405), (4, 0, 5, 46), (3, 2, 5, -324),
        (3, 1, 5, 384), (3, 0, 5, 984), (2, 2, 5, 708), (2, 1, 5, 2772), (2, 0, 5, 3832),
        (1, 2, 5, 2064), (1, 1, 5, 6816), (1, 0, 5, 5376), (0, 2, 5, 4752), (0, 1, 5, 4752),
        (0, 0, 5, 2176), (6, 0, 4, 63), (5, 1, 4, 252), (5, 0, 4, 378), (4, 2, 4, 252),
        (4, 1, 4, 1260), (4, 0, 4, 1272), (3, 2, 4, 1008), (3, 1, 4, 3792), (3, 0, 4, 2568),
        (2, 2, 4, 2784), (2, 1, 4, 6336), (2, 0, 4, 864), (1, 2, 4, 3552), (1, 1, 4, 1248),
        (1, 0, 4, -2400), (0, 2, 4, -2304), (0, 1, 4, -2304), (0, 0, 4, -2112), (8, 0, 3, 2),
        (7, 1, 3, 9), (7, 0, 3, 16), (6, 2, 3, 9), (6, 1, 3, 63), (6, 0, 3, 39), (5, 2, 3, 54),
        (5, 1, 3, 150), (5, 0, 3, 10), (4, 2, 3, 96), (4, 1, 3, 120), (4, 0, 3, -1182),
        (3, 2, 3, 24), (3, 1, 3, -4464), (3, 0, 3, -4496), (2, 2, 3, -4488), (2, 1, 3, -13368),
        (2, 0, 3, -6168), (1, 2, 3, -8880), (1, 1, 3, -11616), (1, 0, 3, -3488),
        (0, 2, 3, -2736), (0, 1, 3, -2736), (0, 0, 3, -352), (8, 0, 2, -3), (7, 1, 2, -12),
        (7, 0, 2, -24), (6, 2, 2, -12), (6, 1, 2, -84), (6, 0, 2, -201), (5, 2, 2, -72),
        (5, 1, 2, -834), (5, 0, 2, -870), (4, 2, 2, -762), (4, 1, 2, -3330), (4, 0, 2, -1104),
        (3, 2, 2, -2568), (3, 1, 2, -2112), (3, 0, 2, 936), (2, 2, 2, 456), (2, 1, 2, 6312),
        (2, 0, 2, 3792), (1, 2, 2, 5856), (1, 1, 2, 9120), (1, 0, 2, 3648), (0, 2, 2, 3264),
        (0, 1, 2, 3264), (0, 0, 2, 1152), (8, 0, 1, -5), (7, 1, 1, -27), (7, 0, 1, -40),
        (6, 2, 1, -27), (6, 1, 1, -189), (6, 0, 1, 5), (5, 2, 1, -162), (5, 1, 1, 183),
        (5, 0, 1, 590), (4, 2, 1, 345), (4, 1, 1, 2805), (4, 0, 1, 1598), (3, 2, 1, 2460),
        (3, 1, 1, 4872), (3, 0, 1, 1712), (2, 2, 1, 2412), (2, 1, 1, 1884), (2, 0, 1, 376),
        (1, 2, 1, -528), (1, 1, 1, -1488), (1, 0, 1, -672), (0, 2, 1, -960), (0, 1, 1, -960),
        (0, 0, 1, -384), (8, 0, 0, 6), (7, 1, 0, 30), (7, 0, 0, 48), (6, 2, 0, 30),
        (6, 1, 0, 210), (6, 0, 0, 114), (5, 2, 0, 180), (5, 1, 0, 330), (5, 0, 0, 12),
        (4, 2, 0, 150), (4, 1, 0, -450), (4, 0, 0, -396), (3, 2, 0, -600), (3, 1, 0, -1680),
        (3, 0, 0, -768), (2, 2, 0, -1080), (2, 1, 0, -1560), (2, 0, 0, -624), (1, 2, 0, -480),
        (1, 1, 0, -480), (1, 0, 0, -192),
    ],
};

pub(crate) static B1N_TABLE: KPolyTable = KPolyTable {
    denom_log2: 3,
    terms: &[
        (2, 0, 8, 8), (1, 1, 8, 32), (1, 0, 8, 40), (0, 2, 8, 32), (0, 1, 8, 80), (0, 0, 8, 48),
        (3, 0, 7, 4), (2, 1, 7, 24), (2, 0, 7, 28), (1, 2, 7, 48), (1, 1, 7, 120), (1, 0, 7, 72),
        (0, 3, 7, 32), (0, 2, 7, 120), (0, 1, 7, 152), (0, 0, 7, 64), (4, 0, 6, -10),
        (3, 1, 6, -36), (3, 0, 6, -70), (2, 2, 6, -20), (2, 1, 6, -160), (2, 0, 6, -188),
        (1, 3, 6, 32), (1, 2, 6, -16), (1, 1, 6, -288), (1, 0, 6, -264), (0, 4, 6, 16),
        (0, 3, 6, 48), (0, 2, 6, -72), (0, 1, 6, -280), (0, 0, 6, -176), (5, 0, 5, -5),
        (4, 1, 5, -30), (4, 0, 5, -47), (3, 2, 5, -60), (3, 1, 5, -226), (3, 0, 5, -190),
        (2, 3, 5, -40), (2, 2, 5, -310), (2, 1, 5, -646), (2, 0, 5, -388), (1, 3, 5, -128),
        (1, 2, 5, -572), (1, 1, 5, -836), (1, 0, 5, -392), (0, 4, 5, -24), (0, 3, 5, -176),
        (0, 2, 5, -424), (0, 1, 5, -432), (0, 0, 5, -160), (6, 0, 4, 2), (5, 1, 4, 3),
        (5, 0, 4, 17), (4, 2, 4, -17), (4, 1, 4, 11), (4, 0, 4, 76), (3, 3, 4, -40),
        (3, 2, 4, -110), (3, 1, 4, 90), (3, 0, 4, 244), (2, 4, 4, -20), (2, 3, 4, -148),
        (2, 2, 4, -148), (2, 1, 4, 388), (2, 0, 4, 480), (1, 4, 4, -40), (1, 3, 4, -168),
        (1, 2, 4, 8), (1, 1, 4, 600), (1, 0, 4, 488), (0, 4, 4, -16), (0, 3, 4, -32),
        (0, 2, 4, 128), (0, 1, 4, 352), (0, 0, 4, 208), (7, 0, 3, 1), (6, 1, 3, 6),
        (6, 0, 3, 13), (5, 2, 3, 12), (5, 1, 3, 71), (5, 0, 3, 83), (4, 3, 3, 8), (4, 2, 3, 121),
        (4, 1, 3, 367), (4, 0, 3, 296), (3, 3, 3, 84), (3, 2, 3, 514), (3, 1, 3, 1006),
        (3, 0, 3, 612), (2, 4, 3, 26), (2, 3, 3, 304), (2, 2, 3, 1070), (2, 1, 3, 1512),
        (2, 0, 3, 732), (1, 4, 3, 52), (1, 3, 3, 400), (1, 2, 3, 1052), (1, 1, 3, 1176),
        (1, 0, 3, 472), (0, 4, 3, 32), (0, 3, 3, 192), (0, 2, 3, 408), (0, 1, 3, 376),
        (0, 0, 3, 128), (7, 1, 2, 1), (7, 0, 2, 1), (6, 2, 2, 5), (6, 1, 2, 15), (6, 0, 2, 8),
        (5, 3, 2, 8), (5, 2, 2, 48), (5, 1, 2, 69), (5, 0, 2, 15), (4, 4, 2, 4), (4, 3, 2, 52),
        (4, 2, 2, 163), (4, 1, 2, 121), (4, 0, 2, -32), (3, 4, 2, 16), (3, 3, 2, 124),
        (3, 2, 2, 242), (3, 1, 2, 6), (3, 0, 2, -178), (2, 4, 2, 22), (2, 3, 2, 120),
        (2, 2, 2, 98), (2, 1, 2, -276), (2, 0, 2, -308), (1, 4, 2, 12), (1, 3, 2, 32),
        (1, 2, 2, -100), (1, 1, 2, -360), (1, 0, 2, -248), (0, 3, 2, -16), (0, 2, 2, -88),
        (0, 1, 2, -152), (0, 0, 2, -80), (7, 1, 1, -1), (7, 0, 1, -2), (6, 2, 1, -3),
        (6, 1, 1, -17), (6, 0, 1, -21), (5, 3, 1, -4), (5, 2, 1, -36), (5, 1, 1, -107),
        (5, 0, 1, -94), (4, 4, 1, -2), (4, 3, 1, -32), (4, 2, 1, -167), (4, 1, 1, -345),
        (4, 0, 1, -233), (3, 4, 1, -8), (3, 3, 1, -100), (3, 2, 1, -398), (3, 1, 1, -636),
        (3, 0, 1, -346), (2, 4, 1, -18), (2, 3, 1, -168), (2, 2, 1, -528), (2, 1, 1, -682),
        (2, 0, 1, -308), (1, 4, 1, -20), (1, 3, 1, -144), (1, 2, 1, -368), (1, 1, 1, -396),
        (1, 0, 1, -152), (0, 4, 1, -8), (0, 3, 1, -48), (0, 2, 1, -104), (0, 1, 1, -96),
        (0, 0, 1, -32), (6, 2, 0, -2), (6, 1, 0, -4), (6, 0, 0, -2), (5, 3, 0, -4),
        (5, 2, 0, -24), (5, 1, 0, -36), (5, 0, 0, -16), (4, 4, 0, -2), (4, 3, 0, -28),
        (4, 2, 0, -100), (4, 1, 0, -124), (4, 0, 0, -50), (3, 4, 0, -8), (3, 3, 0, -68),
        (3, 2, 0, -188), (3, 1, 0, -204), (3, 0, 0, -76), (2, 4, 0, -10), (2, 3, 0, -68),
        (2, 2, 0, -162), (2, 1, 0, -160), (2, 0, 0, -56), (1, 4, 0, -4), (1, 3, 0, -24),
        (1, 2, 0, -52), (1, 1, 0, -48), (1, 0, 0, -16),
    ],
};

pub(crate) static B2N_TABLE: KPolyTable = KPolyTable {
    denom_log2: 1,
    terms: &[
        (2, 0, 6, 2), (1, 1, 6, 8), (1, 0, 6, 10), (0, 2, 6, 8), (0, 1, 6, 20), (0, 0, 6, 12),
        (3, 0, 5, -1), (2, 1, 5, -6), (2, 0, 5, -5), (1, 2, 5, -12), (1, 1, 5, -18),
        (1, 0, 5, -4), (0, 3, 5, -8), (0, 2, 5, -18), (0, 1, 5, -6), (0, 0, 5, 4), (4, 0, 4, -2),
        (3, 1, 4, -11), (3, 0, 4, -19), (2, 2, 4, -23), (2, 1, 4, -87), (2, 0, 4, -78),
        (1, 3, 4, -24), (1, 2, 4, -142), (1, 1, 4, -262), (1, 0, 4, -152), (0, 4, 4, -12),
        (0, 3, 4, -88), (0, 2, 4, -240), (0, 1, 4, -276), (0, 0, 4, -112), (5, 0, 3, 1),
        (4, 1, 3, 12), (4, 0, 3, 13), (3, 2, 3, 54), (3, 1, 3, 125), (3, 0, 3, 69),
        (2, 3, 3, 116), (2, 2, 3, 427), (2, 1, 3, 491), (2, 0, 3, 174), (1, 4, 3, 120),
        (1, 3, 3, 608), (1, 2, 3, 1094), (1, 1, 3, 806), (1, 0, 3, 196), (0, 5, 3, 48),
        (0, 4, 3, 308), (0, 3, 3, 760), (0, 2, 3, 872), (0, 1, 3, 444), (0, 0, 3, 72),
        (5, 1, 2, -3), (5, 0, 2, -1), (4, 2, 2, -27), (4, 1, 2, -41), (4, 0, 2, -2),
        (3, 3, 2, -96), (3, 2, 2, -260), (3, 1, 2, -155), (3, 0, 2, 35), (2, 4, 2, -168),
        (2, 3, 2, -656), (2, 2, 2, -755), (2, 1, 2, -103), (2, 0, 2, 190), (1, 5, 2, -144),
        (1, 4, 2, -736), (1, 3, 2, -1256), (1, 2, 2, -598), (1, 1, 2, 414), (1, 0, 2, 358),
        (0, 6, 2, -48), (0, 5, 2, -304), (0, 4, 2, -684), (0, 3, 2, -536), (0, 2, 2, 228),
        (0, 1, 2, 572), (0, 0, 2, 236), (5, 1, 1, -3), (5, 0, 1, -4), (4, 2, 1, -35),
        (4, 1, 1, -85), (4, 0, 1, -51), (3, 3, 1, -144), (3, 2, 1, -542), (3, 1, 1, -657),
        (3, 0, 1, -256), (2, 4, 1, -272), (2, 3, 1, -1420), (2, 2, 1, -2687), (2, 1, 1, -2169),
        (2, 0, 1, -625), (1, 5, 1, -240), (1, 4, 1, -1624), (1, 3, 1, -4256), (1, 2, 1, -5370),
        (1, 1, 1, -3236), (1, 0, 1, -736), (0, 6, 1, -80), (0, 5, 1, -672), (0, 4, 1, -2276),
        (0, 3, 1, -3968), (0, 2, 1, -3734), (0, 1, 1, -1782), (0, 0, 1, -332), (5, 1, 0, 6),
        (5, 0, 0, 4), (4, 2, 0, 38), (4, 1, 0, 90), (4, 0, 0, 42), (3, 3, 0, 96), (3, 2, 0, 388),
        (3, 1, 0, 482), (3, 0, 0, 172), (2, 4, 0, 128), (2, 3, 0, 712), (2, 2, 0, 1430),
        (2, 1, 0, 1202), (2, 0, 0, 342), (1, 5, 0, 96), (1, 4, 0, 656), (1, 3, 0, 1760),
        (1, 2, 0, 2292), (1, 1, 0, 1424), (1, 0, 0, 328), (0, 6, 0, 32), (0, 5, 0, 256),
        (0, 4, 0, 840), (0, 3, 0, 1440), (0, 2, 0, 1348), (0, 1, 0, 644), (0, 0, 0, 120),
    ],
};

pub(crate) static DB_TABLE: KPolyTable = KPolyTable {
    denom_log2: 1,
    terms: &[
        (4, 0, 5, 2), (3, 1, 5, 16), (3, 0, 5, 24), (2, 2, 5, 48), (2, 1, 5, 144),
        (2, 0, 5, 106), (1, 3, 5, 64), (1, 2, 5, 288), (1, 1, 5, 424), (1, 0, 5, 204),
        (0, 4, 5, 32), (0, 3, 5, 192), (0, 2, 5, 424), (0, 1, 5, 408), (0, 0, 5, 144),
        (3, 1, 4, 4), (3, 0, 4, 4), (2, 2, 4, 20), (2, 1, 4, 52), (2, 0, 4, 32), (1, 3, 4, 32),
        (1, 2, 4, 136), (1, 1, 4, 184), (1, 0, 4, 80), (0, 4, 4, 16), (0, 3, 4, 96),
        (0, 2, 4, 208), (0, 1, 4, 192), (0, 0, 4, 64), (6, 0, 3, -2), (5, 1, 3, -25),
        (5, 0, 3, -37), (4, 2, 3, -129), (4, 1, 3, -383), (4, 0, 3, -284), (3, 3, 3, -352),
        (3, 2, 3, -1572), (3, 1, 3, -2327), (3, 0, 3, -1147), (2, 4, 3, -536), (2, 3, 3, -3200),
        (2, 2, 3, -7103), (2, 1, 3, -6967), (2, 0, 3, -2556), (1, 5, 3, -432), (1, 4, 3, -3232),
        (1, 3, 3, -9576), (1, 2, 3, -14062), (1, 1, 3, -10258), (1, 0, 3, -2980),
        (0, 6, 3, -144), (0, 5, 3, -1296), (0, 4, 3, -4812), (0, 3, 3, -9432), (0, 2, 3, -10300),
        (0, 1, 3, -5952), (0, 0, 3, -1424), (5, 1, 2, -4), (5, 0, 2, -4), (4, 2, 2, -38),
        (4, 1, 2, -96), (4, 0, 2, -58), (3, 3, 2, -140), (3, 2, 2, -572), (3, 1, 2, -761),
        (3, 0, 2, -329), (2, 4, 2, -250), (2, 3, 2, -1420), (2, 2, 2, -2971), (2, 1, 2, -2713),
        (2, 0, 2, -912), (1, 5, 2, -216), (1, 4, 2, -1580), (1, 3, 2, -4552), (1, 2, 2, -6454),
        (1, 1, 2, -4502), (1, 0, 2, -1236), (0, 6, 2, -72), (0, 5, 2, -648), (0, 4, 2, -2396),
        (0, 3, 2, -4656), (0, 2, 2, -5012), (0, 1, 2, -2832), (0, 0, 2, -656), (6, 0, 1, 2),
        (5, 1, 1, 16), (5, 0, 1, 28), (4, 2, 1, 52), (4, 1, 1, 184), (4, 0, 1, 160),
        (3, 3, 1, 88), (3, 2, 1, 472), (3, 1, 1, 831), (3, 0, 1, 479), (2, 4, 1, 84),
        (2, 3, 1, 600), (2, 2, 1, 1591), (2, 1, 1, 1851), (2, 0, 1, 794), (1, 5, 1, 48),
        (1, 4, 1, 408), (1, 3, 1, 1400), (1, 2, 1, 2406), (1, 1, 1, 2058), (1, 0, 1, 696),
        (0, 6, 1, 16), (0, 5, 1, 144), (0, 4, 1, 556), (0, 3, 1, 1176), (0, 2, 1, 1428),
        (0, 1, 1, 936), (0, 0, 1, 256), (5, 1, 0, 1), (5, 0, 0, 1), (4, 2, 0, 7), (4, 1, 0, 19),
        (4, 0, 0, 12), (3, 3, 0, 20), (3, 2, 0, 88), (3, 1, 0, 125), (3, 0, 0, 57),
        (2, 4, 0, 30), (2, 3, 0, 180), (2, 2, 0, 399), (2, 1, 0, 385), (2, 0, 0, 136),
        (1, 5, 0, 24), (1, 4, 0, 180), (1, 3, 0, 536), (1, 2, 0, 790), (1, 1, 0, 574),
        (1, 0, 0, 164), (0, 6, 0, 8), (0, 5, 0, 72), (0, 4, 0, 268), (0, 3, 0, 528),
        (0, 2, 0, 580), (0, 1, 0, 336), (0, 0, 0, 80),
    ],
};

pub(crate) static C1N_TABLE: KPolyTable = KPolyTable {
    denom_log2: 1,
    terms: &[
        (2, 0, 11, 8), (1, 1, 11, 32), (1, 0, 11, 48), (0, 2, 11, 32), (0, 1, 11, 96),
        (0, 0, 11, 72), (2, 0, 10, 96), (1, 1, 10, 400), (1, 0, 10, 592), (0, 2, 10, 400),
        (0, 1, 10, 1200), (0, 0, 10, 896), (4, 0, 9, -14), (3, 1, 9, -92), (3, 0, 9, -148),
        (2, 2, 9, -236), (2, 1, 9, -748), (2, 0, 9, -134), (1, 3, 9, -288), (1, 2, 9, -1336),
        (1, 1, 9, -20), (1, 0, 9, 1896), (0, 4, 9, -144), (0, 3, 9, -864), (0, 2, 9, 100),
        (0, 1, 9, 4188), (0, 0, 9, 3816), (4, 0, 8, -140), (3, 1, 8, -948), (3, 0, 8, -1508),
        (2, 2, 8, -2460), (2, 1, 8, -7764), (2, 0, 8, -5044), (1, 3, 8, -3024),
        (1, 2, 8, -13992), (1, 1, 8, -16164), (1, 0, 8, -3556), (0, 4, 8, -1512),
        (0, 3, 8, -9072), (0, 2, 8, -15012), (0, 1, 8, -4212), (0, 0, 8, 4200), (6, 0, 7, 4),
        (5, 1, 7, 7), (5, 0, 7, 31), (4, 2, 7, -137), (4, 1, 7, -239), (4, 0, 7, -602),
        (3, 3, 7, -720), (3, 2, 7, -2708), (3, 1, 7, -7243), (3, 0, 7, -7415), (2, 4, 7, -1440),
        (2, 3, 7, -7920), (2, 2, 7, -26755), (2, 1, 7, -47611), (2, 0, 7, -29456),
        (1, 5, 7, -1296), (1, 4, 7, -9360), (1, 3, 7, -40152), (1, 2, 7, -99430),
        (1, 1, 7, -113226), (1, 0, 7, -45740), (0, 6, 7, -432), (0, 5, 7, -3888),
        (0, 4, 7, -21156), (0, 3, 7, -68616), (0, 2, 7, -113988), (0, 1, 7, -85680),
        (0, 0, 7, -21984), (6, 0, 6, 32), (5, 1, 6, 64), (5, 0, 6, 256), (4, 2, 6, -1106),
        (4, 1, 6, -1892), (4, 0, 6, -1426), (3, 3, 6, -6012), (3, 2, 6, -22460),
        (3, 1, 6, -35545), (3, 0, 6, -22937), (2, 4, 6, -12186), (2, 3, 6, -66780),
        (2, 2, 6, -160015), (2, 1, 6, -195697), (2, 0, 6, -96580), (1, 5, 6, -11016),
        (1, 4, 6, -79452), (1, 3, 6, -259392), (1, 2, 6, -468358), (1, 1, 6, -442770),
        (1, 0, 6, -169784), (0, 6, 6, -3672), (0, 5, 6, -33048), (0, 4, 6, -139200),
        (0, 3, 6, -339480), (0, 2, 6, -479820), (0, 1, 6, -357948), (0, 0, 6, -108936),
        (8, 0, 5, 2), (7, 1, 5, 53), (7, 0, 5, 69), (6, 2, 5, 503), (6, 1, 5, 1377),
        (6, 0, 5, 1008), (5, 3, 5, 2466), (5, 2, 5, 10416), (5, 1, 5, 14577), (5, 0, 5, 7207),
        (4, 4, 5, 7092), (4, 3, 5, 40698), (4, 2, 5, 82569), (4, 1, 5, 73417), (4, 0, 5, 24750),
        (3, 5, 5, 12474), (3, 4, 5, 90738), (3, 3, 5, 240036), (3, 2, 5, 292408),
        (3, 1, 5, 155740), (3, 0, 5, 22720), (2, 6, 5, 13230), (2, 5, 5, 116802),
        (2, 4, 5, 382344), (2, 3, 5, 582108), (2, 2, 5, 365536), (2, 1, 5, -24208),
        (2, 0, 5, -92668), (1, 7, 5, 7776), (1, 6, 5, 80892), (1, 5, 5, 318258),
        (1, 4, 5, 586902), (1, 3, 5, 404478), (1, 2, 5, -263998), (1, 1, 5, -587444),
        (1, 0, 5, -267104), (0, 8, 5, 1944), (0, 7, 5, 23328), (0, 6, 5, 108354),
        (0, 5, 5, 240354), (0, 4, 5, 193158), (0, 3, 5, -241866), (0, 2, 5, -710264),
        (0, 1, 5, -631968), (0, 0, 5, -205680), (8, 0, 4, 12), (7, 1, 4, 322), (7, 0, 4, 418),
        (6, 2, 4, 3112), (6, 1, 4, 8478), (6, 0, 4, 5722), (5, 3, 4, 15516), (5, 2, 4, 65220),
        (5, 1, 4, 89828), (5, 0, 4, 40916), (4, 4, 4, 45234), (4, 3, 4, 258516),
        (4, 2, 4, 538934), (4, 1, 4, 490396), (4, 0, 4, 166072), (3, 5, 4, 80352),
        (3, 4, 4, 582696), (3, 3, 4, 1630494), (3, 2, 4, 2213506), (3, 1, 4, 1461756),
        (3, 0, 4, 378224), (2, 6, 4, 85752), (2, 5, 4, 755568), (2, 4, 4, 2662494),
        (2, 3, 4, 4808706), (2, 2, 4, 4670160), (2, 1, 4, 2281928), (2, 0, 4, 428380),
        (1, 7, 4, 50544), (1, 6, 4, 525312), (1, 5, 4, 2242098), (1, 4, 4, 5079846),
        (1, 3, 4, 6517542), (1, 2, 4, 4595918), (1, 1, 4, 1526480), (1, 0, 4, 134196),
        (0, 8, 4, 12636), (0, 7, 4, 151632), (0, 6, 4, 763566), (0, 5, 4, 2095686),
        (0, 4, 4, 3372378), (0, 3, 4, 3128202), (0, 2, 4, 1449272), (0, 1, 4, 139380),
        (0, 0, 4, -83912), (8, 0, 3, 20), (7, 1, 3, 559), (7, 0, 3, 719), (6, 2, 3, 5743),
        (6, 1, 3, 15399), (6, 0, 3, 10072), (5, 3, 3, 30138), (5, 2, 3, 124872),
        (5, 1, 3, 169175), (5, 0, 3, 74697), (4, 4, 3, 91278), (4, 3, 3, 515802),
        (4, 2, 3, 1069565), (4, 1, 3, 966931), (4, 0, 3, 322470), (3, 5, 3, 166446),
        (3, 4, 3, 1197342), (3, 3, 3, 3360930), (3, 2, 3, 4612786), (3, 1, 3, 3104189),
        (3, 0, 3, 825037), (2, 6, 3, 180474), (2, 5, 3, 1582182), (2, 4, 3, 5627514),
        (2, 3, 3, 10403022), (2, 2, 3, 10546601), (2, 1, 3, 5569857), (2, 0, 3, 1206664),
        (1, 7, 3, 107136), (1, 6, 3, 1110900), (1, 5, 3, 4805352), (1, 4, 3, 11230224),
        (1, 3, 3, 15282288), (1, 2, 3, 12073926), (1, 1, 3, 5115782), (1, 0, 3, 899668),
        (0, 8, 3, 26784), (0, 7, 3, 321408), (0, 6, 3, 1643868), (0, 5, 3, 4670460),
        (0, 4, 3, 8032032), (0, 3, 3, 8508348), (0, 2, 3, 5367980), (0, 1, 3, 1816512),
        (0, 0, 3, 247032), (7, 1, 2, 71), (7, 0, 2, 71), (6, 2, 2, 1733), (6, 1, 2, 3963),
        (6, 0, 2, 2118), (5, 3, 2, 13206), (5, 2, 2, 50016), (5, 1, 2, 61398), (5, 0, 2, 23916),
        (4, 4, 2, 48804), (4, 3, 2, 261246), (4, 2, 2, 511884), (4, 1, 2, 435196),
        (4, 0, 2, 135194), (3, 5, 2, 99630), (3, 4, 2, 693366), (3, 3, 2, 1883214),
        (3, 2, 2, 2500306), (3, 1, 2, 1629103), (3, 0, 2, 420515), (2, 6, 2, 114858),
        (2, 5, 2, 988038), (2, 4, 2, 3454704), (2, 3, 2, 6289626), (2, 2, 2, 6303013),
        (2, 1, 2, 3317555), (2, 0, 2, 727732), (1, 7, 2, 69984), (1, 6, 2, 719604),
        (1, 5, 2, 3095928), (1, 4, 2, 7219356), (1, 3, 2, 9855984), (1, 2, 2, 7895006),
        (1, 1, 2, 3461382), (1, 0, 2, 653216), (0, 8, 2, 17496), (0, 7, 2, 209952),
        (0, 6, 2, 1077660), (0, 5, 2, 3085452), (0, 4, 2, 5382924), (0, 3, 2, 5856228),
        (0, 2, 2, 3885204), (0, 1, 2, 1447020), (0, 0, 2, 236424), (8, 0, 1, -22),
        (7, 1, 1, -459), (7, 0, 1, -635), (6, 2, 1, -3261), (6, 1, 1, -9735), (6, 0, 1, -7028),
        (5, 3, 1, -11628), (5, 2, 1, -54450), (5, 1, 1, -82257), (5, 0, 1, -40295),
        (4, 4, 1, -23874), (4, 3, 1, -153636), (4, 2, 1, -359409), (4, 1, 1, -362481),
        (4, 0, 1, -133196), (3, 5, 1, -30072), (3, 4, 1, -245856), (3, 3, 1, -782790),
        (3, 2, 1, -1210494), (3, 1, 1, -906618), (3, 0, 1, -262130), (2, 6, 1, -24024),
        (2, 5, 1, -234360), (2, 4, 1, -934962), (2, 3, 1, -1944426), (2, 2, 1, -2211162),
        (2, 1, 1, -1293450), (2, 0, 1, -300286), (1, 7, 1, -12000), (1, 6, 1, -132048),
        (1, 5, 1, -616554), (1, 4, 1, -1578102), (1, 3, 1, -2376726), (1, 2, 1, -2086314),
        (1, 1, 1, -973332), (1, 0, 1, -180960), (0, 8, 1, -3000), (0, 7, 1, -36000),
        (0, 6, 1, -187374), (0, 5, 1, -552366), (0, 4, 1, -1005042), (0, 3, 1, -1146762),
        (0, 2, 1, -789876), (0, 1, 1, -292140), (0, 0, 1, -41688), (8, 0, 0, -12),
        (7, 1, 0, -186), (7, 0, 0, -282), (6, 2, 0, -1230), (6, 1, 0, -3762), (6, 0, 0, -2808),
        (5, 3, 0, -4578), (5, 2, 0, -21114), (5, 1, 0, -31752), (5, 0, 0, -15528),
        (4, 4, 0, -10614), (4, 3, 0, -65346), (4, 2, 0, -147900), (4, 1, 0, -145488),
        (4, 0, 0, -52308), (3, 5, 0, -15870), (3, 4, 0, -121806), (3, 3, 0, -367392),
        (3, 2, 0, -543024), (3, 1, 0, -392022), (3, 0, 0, -110118), (2, 6, 0, -15090),
        (2, 5, 0, -138150), (2, 4, 0, -518628), (2, 3, 0, -1019856), (2, 2, 0, -1104522),
        (2, 1, 0, -621942), (2, 0, 0, -141432), (1, 7, 0, -8400), (1, 6, 0, -88980),
        (1, 5, 0, -397890), (1, 4, 0, -972294), (1, 3, 0, -1398630), (1, 2, 0, -1179582),
        (1, 1, 0, -536880), (1, 0, 0, -100872), (0, 8, 0, -2100), (0, 7, 0, -25200),
        (0, 6, 0, -130290), (0, 5, 0, -378810), (0, 4, 0, -676158), (0, 3, 0, -756198),
        (0, 2, 0, -514668), (0, 1, 0, -193248), (0, 0, 0, -30240),
    ],
};

pub(crate) static C2N_TABLE: KPolyTable = KPolyTable {
    denom_log2: 0,
    terms: &[
        (2, 0, 9, 2), (1, 1, 9, 8), (1, 0, 9, 12), (0, 2, 9, 8), (0, 1, 9, 24), (0, 0, 9, 18),
        (2, 0, 8, 22), (1, 1, 8, 92), (1, 0, 8, 136), (0, 2, 8, 92), (0, 1, 8, 276),
        (0, 0, 8, 206), (4, 0, 7, -4), (3, 1, 7, -33), (3, 0, 7, -49), (2, 2, 7, -101),
        (2, 1, 7, -301), (2, 0, 7, -138), (1, 3, 7, -136), (1, 2, 7, -610), (1, 1, 7, -513),
        (1, 0, 7, 117), (0, 4, 7, -68), (0, 3, 7, -408), (0, 2, 7, -519), (0, 1, 7, 279),
        (0, 0, 7, 540), (4, 0, 6, -36), (3, 1, 6, -307), (3, 0, 6, -451), (2, 2, 6, -961),
        (2, 1, 6, -2843), (2, 0, 6, -1968), (1, 3, 6, -1308), (1, 2, 6, -5846), (1, 1, 6, -7884),
        (1, 0, 6, -3230), (0, 4, 6, -654), (0, 3, 6, -3924), (0, 2, 6, -8004), (0, 1, 6, -6354),
        (0, 0, 6, -1526), (6, 0, 5, 2), (5, 1, 5, 25), (5, 0, 5, 37), (4, 2, 5, 129),
        (4, 1, 5, 383), (4, 0, 5, 176), (3, 3, 5, 352), (3, 2, 5, 1572), (3, 1, 5, 1340),
        (3, 0, 5, -272), (2, 4, 5, 536), (2, 3, 5, 3200), (2, 2, 5, 3878), (2, 1, 5, -2444),
        (2, 0, 5, -4268), (1, 5, 5, 432), (1, 4, 5, 3232), (1, 3, 5, 5100), (1, 2, 5, -5816),
        (1, 1, 5, -18269), (1, 0, 5, -10557), (0, 6, 5, 144), (0, 5, 5, 1296), (0, 4, 5, 2574),
        (0, 3, 5, -3996), (0, 2, 5, -19019), (0, 1, 5, -21579), (0, 0, 5, -8076), (6, 0, 4, 14),
        (5, 1, 4, 179), (5, 0, 4, 263), (4, 2, 4, 941), (4, 1, 4, 2777), (4, 0, 4, 1930),
        (3, 3, 4, 2604), (3, 2, 4, 11576), (3, 1, 4, 15746), (3, 0, 4, 6590), (2, 4, 4, 4002),
        (2, 3, 4, 23820), (2, 2, 4, 47984), (2, 1, 4, 38154), (2, 0, 4, 9350), (1, 5, 4, 3240),
        (1, 4, 4, 24204), (1, 3, 4, 64776), (1, 2, 4, 75048), (1, 1, 4, 33416), (1, 0, 4, 1496),
        (0, 6, 4, 1080), (0, 5, 4, 9720), (0, 4, 4, 32676), (0, 3, 4, 50256), (0, 2, 4, 31832),
        (0, 1, 4, 564), (0, 0, 4, -5302), (6, 0, 3, 22), (5, 1, 3, 312), (5, 0, 3, 444),
        (4, 2, 3, 1762), (4, 1, 3, 5084), (4, 0, 3, 3668), (3, 3, 3, 5116), (3, 2, 3, 22396),
        (3, 1, 3, 31887), (3, 0, 3, 15111), (2, 4, 3, 8098), (2, 3, 3, 47740), (2, 2, 3, 101565),
        (2, 1, 3, 93391), (2, 0, 3, 31798), (1, 5, 3, 6648), (1, 4, 3, 49436), (1, 3, 3, 140688),
        (1, 2, 3, 191698), (1, 1, 3, 125341), (1, 0, 3, 31547), (0, 6, 3, 2216),
        (0, 5, 3, 19944), (0, 4, 3, 71616), (0, 3, 3, 130536), (0, 2, 3, 126211),
        (0, 1, 3, 60465), (0, 0, 3, 10844), (6, 0, 2, -14), (5, 1, 2, -65), (5, 0, 2, -149),
        (4, 2, 2, 85), (4, 1, 2, -155), (4, 0, 2, -298), (3, 3, 2, 1044), (3, 2, 2, 3472),
        (3, 1, 2, 3641), (3, 0, 2, 1541), (2, 4, 2, 2382), (2, 3, 2, 12660), (2, 2, 2, 24281),
        (2, 1, 2, 20897), (2, 0, 2, 7596), (1, 5, 2, 2232), (1, 4, 2, 15924), (1, 3, 2, 43716),
        (1, 2, 2, 58430), (1, 1, 2, 39236), (1, 0, 2, 11354), (0, 6, 2, 744), (0, 5, 2, 6696),
        (0, 4, 2, 24306), (0, 3, 2, 45396), (0, 2, 2, 46196), (0, 1, 2, 24702), (0, 0, 2, 5686),
        (6, 0, 1, -24), (5, 1, 1, -199), (5, 0, 1, -343), (4, 2, 1, -673), (4, 1, 1, -2341),
        (4, 0, 1, -1932), (3, 3, 1, -1196), (3, 2, 1, -6280), (3, 1, 1, -10490),
        (3, 0, 1, -5502), (2, 4, 1, -1218), (2, 3, 1, -8460), (2, 2, 1, -21246),
        (2, 1, 1, -22558), (2, 0, 1, -8338), (1, 5, 1, -744), (1, 4, 1, -6156),
        (1, 3, 1, -19988), (1, 2, 1, -31432), (1, 1, 1, -23431), (1, 0, 1, -6335),
        (0, 6, 1, -248), (0, 5, 1, -2232), (0, 4, 1, -8266), (0, 3, 1, -16116),
        (0, 2, 1, -17209), (0, 1, 1, -9237), (0, 0, 1, -1790), (5, 1, 0, -12), (5, 0, 0, -12),
        (4, 2, 0, -84), (4, 1, 0, -228), (4, 0, 0, -144), (3, 3, 0, -240), (3, 2, 0, -1056),
        (3, 1, 0, -1464), (3, 0, 0, -648), (2, 4, 0, -360), (2, 3, 0, -2160), (2, 2, 0, -4680),
        (2, 1, 0, -4296), (2, 0, 0, -1416), (1, 5, 0, -288), (1, 4, 0, -2160), (1, 3, 0, -6288),
        (1, 2, 0, -8832), (1, 1, 0, -5916), (1, 0, 0, -1500), (0, 6, 0, -96), (0, 5, 0, -864),
        (0, 4, 0, -3144), (0, 3, 0, -5904), (0, 2, 0, -5988), (0, 1, 0, -3060), (0, 0, 0, -600),
    ],
};

pub(crate) static DC_TABLE: KPolyTable = KPolyTable {
    denom_log2: 4,
    terms: &[
        (2, 0, 13, 32), (1, 1, 13, 128), (1, 0, 13, 192), (0, 2, 13, 128), (0, 1, 13, 384),
        (0, 0, 13, 288), (2, 0, 12, 288), (1, 1, 12, 1216), (1, 0, 12, 1792), (0, 2, 12, 1216),
        (0, 1, 12, 3648), (0, 0, 12, 2720), (4, 0, 11, -80), (3, 1, 11, -464), (3, 0, 11, -784),
        (2, 2, 11, -1040), (2, 1, 11, -3472), (2, 0, 11, -2000), (1, 3, 11, -1152),
        (1, 2, 11, -5536), (1, 1, 11, -4752), (1, 0, 11, 1136), (0, 4, 11, -576),
        (0, 3, 11, -3456), (0, 2, 11, -3696), (0, 1, 11, 4464), (0, 0, 11, 6112),
        (4, 0, 10, -592), (3, 1, 10, -3248), (3, 0, 10, -5616), (2, 2, 10, -6416),
        (2, 1, 10, -22576), (2, 0, 10, -18736), (1, 3, 10, -6336), (1, 2, 10, -31840),
        (1, 1, 10, -48736), (1, 0, 10, -23648), (0, 4, 10, -3168), (0, 3, 10, -19008),
        (0, 2, 10, -38752), (0, 1, 10, -30720), (0, 0, 10, -7424), (6, 0, 9, 66), (5, 1, 9, 480),
        (5, 0, 9, 876), (4, 2, 9, 1344), (4, 1, 9, 5088), (4, 0, 9, 3210), (3, 3, 9, 1728),
        (3, 2, 9, 10560), (3, 1, 9, 12744), (3, 0, 9, -864), (2, 4, 9, 864), (2, 3, 9, 8640),
        (2, 2, 9, 16840), (2, 1, 9, -7960), (2, 0, 9, -25832), (1, 4, 9, 1728), (1, 3, 9, 4160),
        (1, 2, 9, -16432), (1, 1, 9, -61520), (1, 0, 9, -49664), (0, 4, 9, -3104),
        (0, 3, 9, -18624), (0, 2, 9, -49376), (0, 1, 9, -64320), (0, 0, 9, -32576),
        (6, 0, 8, 402), (5, 1, 8, 2820), (5, 0, 8, 5232), (4, 2, 8, 7572), (4, 1, 8, 29244),
        (4, 0, 8, 26370), (3, 3, 8, 9504), (3, 2, 8, 58800), (3, 1, 8, 110256), (3, 0, 8, 63672),
        (2, 4, 8, 4752), (2, 3, 8, 47520), (2, 2, 8, 156432), (2, 1, 8, 196416),
        (2, 0, 8, 78840), (1, 4, 8, 9504), (1, 3, 8, 74496), (1, 2, 8, 190656),
        (1, 1, 8, 178464), (1, 0, 8, 45984), (0, 4, 8, 8736), (0, 3, 8, 52416), (0, 2, 8, 98976),
        (0, 1, 8, 61056), (0, 0, 8, 2880), (8, 0, 7, -20), (7, 1, 7, -161), (7, 0, 7, -321),
        (6, 2, 7, -485), (6, 1, 7, -2097), (6, 0, 7, -1418), (5, 3, 7, -648), (5, 2, 7, -4854),
        (5, 1, 7, -6257), (5, 0, 7, 1353), (4, 4, 7, -324), (4, 3, 7, -4536), (4, 2, 7, -7883),
        (4, 1, 7, 15351), (4, 0, 7, 29836), (3, 4, 7, -1296), (3, 3, 7, 672), (3, 2, 7, 44316),
        (3, 1, 7, 128320), (3, 0, 7, 103548), (2, 4, 7, 4224), (2, 3, 7, 47424),
        (2, 2, 7, 187324), (2, 1, 7, 305700), (2, 0, 7, 177136), (1, 4, 7, 11040),
        (1, 3, 7, 93312), (1, 2, 7, 277680), (1, 1, 7, 348496), (1, 0, 7, 159840),
        (0, 4, 7, 13536), (0, 3, 7, 81216), (0, 2, 7, 179008), (0, 1, 7, 171552),
        (0, 0, 7, 61248), (8, 0, 6, -108), (7, 1, 6, -877), (7, 0, 6, -1741), (6, 2, 6, -2659),
        (6, 1, 6, -11457), (6, 0, 6, -11456), (5, 3, 6, -3564), (5, 2, 6, -26646),
        (5, 1, 6, -59710), (5, 0, 6, -40480), (4, 4, 6, -1782), (4, 3, 6, -24948),
        (4, 2, 6, -107518), (4, 1, 6, -171480), (4, 0, 6, -86774), (3, 4, 6, -7128),
        (3, 3, 6, -73728), (3, 2, 6, -245520), (3, 1, 6, -303448), (3, 0, 6, -113560),
        (2, 4, 6, -15480), (2, 3, 6, -126288), (2, 2, 6, -335608), (2, 1, 6, -321984),
        (2, 0, 6, -79400), (1, 4, 6, -16704), (1, 3, 6, -116160), (1, 2, 6, -255840),
        (1, 1, 6, -187936), (1, 0, 6, -18976), (0, 4, 6, -7968), (0, 3, 6, -47808),
        (0, 2, 6, -86560), (0, 1, 6, -44544), (0, 0, 6, 5632), (10, 0, 5, 2), (9, 1, 5, 17),
        (9, 0, 5, 37), (8, 2, 5, 53), (8, 1, 5, 259), (8, 0, 5, 144), (7, 3, 5, 72),
        (7, 2, 5, 640), (7, 1, 5, 418), (7, 0, 5, -1126), (6, 4, 5, 36), (6, 3, 5, 648),
        (6, 2, 5, -512), (6, 1, 5, -10202), (6, 0, 5, -13252), (5, 4, 5, 216), (5, 3, 5, -2556),
        (5, 2, 5, -28340), (5, 1, 5, -75383), (5, 0, 5, -59851), (4, 4, 5, -1926),
        (4, 3, 5, -29844), (4, 2, 5, -143045), (4, 1, 5, -260945), (4, 0, 5, -160192),
        (3, 4, 5, -9144), (3, 3, 5, -103296), (3, 2, 5, -378212), (3, 1, 5, -548600),
        (3, 0, 5, -275908), (2, 4, 5, -24216), (2, 3, 5, -204432), (2, 2, 5, -596252),
        (2, 1, 5, -711356), (2, 0, 5, -298688), (1, 4, 5, -29568), (1, 3, 5, -208320),
        (1, 2, 5, -513872), (1, 1, 5, -521712), (1, 0, 5, -185408), (0, 4, 5, -15456),
        (0, 3, 5, -92736), (0, 2, 5, -195744), (0, 1, 5, -169920), (0, 0, 5, -50656),
        (10, 0, 4, 10), (9, 1, 4, 89), (9, 0, 4, 189), (8, 2, 4, 287), (8, 1, 4, 1375),
        (8, 0, 4, 1538), (7, 3, 4, 396), (7, 2, 4, 3484), (7, 1, 4, 9106), (7, 0, 4, 7218),
        (6, 4, 4, 198), (6, 3, 4, 3564), (6, 2, 4, 18616), (6, 1, 4, 35662), (6, 0, 4, 21930),
        (5, 4, 4, 1188), (5, 3, 4, 14976), (5, 2, 4, 60328), (5, 1, 4, 91480), (5, 0, 4, 43968),
        (4, 4, 4, 3924), (4, 3, 4, 39096), (4, 2, 4, 128296), (4, 1, 4, 156604),
        (4, 0, 4, 56262), (3, 4, 4, 7776), (3, 3, 4, 66240), (3, 2, 4, 182944),
        (3, 1, 4, 179200), (3, 0, 4, 41928), (2, 4, 4, 9792), (2, 3, 4, 73152),
        (2, 2, 4, 171904), (2, 1, 4, 132352), (2, 0, 4, 11912), (1, 4, 4, 7200),
        (1, 3, 4, 48000), (1, 2, 4, 97024), (1, 1, 4, 56992), (1, 0, 4, -5152), (0, 4, 4, 2400),
        (0, 3, 4, 14400), (0, 2, 4, 25120), (0, 1, 4, 10560), (0, 0, 4, -3808), (10, 0, 3, 10),
        (9, 1, 3, 106), (9, 0, 3, 206), (8, 2, 3, 372), (8, 1, 3, 1698), (8, 0, 3, 1876),
        (7, 3, 3, 532), (7, 2, 3, 4572), (7, 1, 3, 12327), (7, 0, 3, 10287), (6, 4, 3, 266),
        (6, 3, 3, 4788), (6, 2, 3, 26765), (6, 1, 3, 55875), (6, 0, 3, 38158), (5, 4, 3, 1596),
        (5, 3, 3, 22792), (5, 2, 3, 101118), (5, 1, 3, 171849), (5, 0, 3, 97803),
        (4, 4, 3, 6608), (4, 3, 3, 71232), (4, 2, 3, 254195), (4, 1, 3, 358317),
        (4, 0, 3, 171972), (3, 4, 3, 15792), (3, 3, 3, 138880), (3, 2, 3, 415908),
        (3, 1, 3, 499328), (3, 0, 3, 204772), (2, 4, 3, 22064), (2, 3, 3, 165984),
        (2, 2, 3, 430516), (2, 1, 3, 449980), (2, 0, 3, 159392), (1, 4, 3, 16800),
        (1, 3, 3, 112000), (1, 2, 3, 258160), (1, 1, 3, 239360), (1, 0, 3, 73904),
        (0, 4, 3, 5600), (0, 3, 3, 33600), (0, 2, 3, 69680), (0, 1, 3, 57840), (0, 0, 3, 15584),
        (10, 0, 2, -10), (9, 1, 2, -77), (9, 0, 2, -177), (8, 2, 2, -227), (8, 1, 2, -1147),
        (8, 0, 2, -1262), (7, 3, 2, -300), (7, 2, 2, -2716), (7, 1, 2, -6693), (7, 0, 2, -4613),
        (6, 4, 2, -150), (6, 3, 2, -2700), (6, 2, 2, -12645), (6, 1, 2, -19981),
        (6, 0, 2, -9148), (5, 4, 2, -900), (5, 3, 2, -9300), (5, 2, 2, -29746),
        (5, 1, 2, -33054), (5, 0, 2, -9296), (4, 4, 2, -1950), (4, 3, 2, -15300),
        (4, 2, 2, -37566), (4, 1, 2, -30304), (4, 0, 2, -3330), (3, 4, 2, -1800),
        (3, 3, 2, -12000), (3, 2, 2, -24256), (3, 1, 2, -14248), (3, 0, 2, 1288),
        (2, 4, 2, -600), (2, 3, 2, -3600), (2, 2, 2, -6280), (2, 1, 2, -2640), (2, 0, 2, 952),
        (10, 0, 1, -12), (9, 1, 1, -135), (9, 0, 1, -255), (8, 2, 1, -485), (8, 1, 1, -2185),
        (8, 0, 1, -2168), (7, 3, 1, -700), (7, 2, 1, -5980), (7, 1, 1, -14120), (7, 0, 1, -9704),
        (6, 4, 1, -350), (6, 3, 1, -6300), (6, 2, 1, -29080), (6, 1, 1, -47800),
        (6, 0, 1, -25282), (5, 4, 1, -2100), (5, 3, 1, -21700), (5, 2, 1, -71860),
        (5, 1, 1, -92225), (5, 0, 1, -39605), (4, 4, 1, -4550), (4, 3, 1, -35700),
        (4, 2, 1, -95395), (4, 1, 1, -101875), (4, 0, 1, -36682), (3, 4, 1, -4200),
        (3, 3, 1, -28000), (3, 2, 1, -64540), (3, 1, 1, -59840), (3, 0, 1, -18476),
        (2, 4, 1, -1400), (2, 3, 1, -8400), (2, 2, 1, -17420), (2, 1, 1, -14460),
        (2, 0, 1, -3896),
    ],
};

pub(crate) static NM2N_TABLE: KPolyTable = KPolyTable {
    denom_log2: 4,
    terms: &[
        (7, 2, 0, 4), (6, 3, 0, 12), (6, 2, 0, 26), (6, 1, 0, 22), (5, 4, 0, 9), (5, 3, 0, 66),
        (5, 2, 0, 145), (5, 1, 0, 132), (4, 4, 0, 39), (4, 3, 0, 222), (4, 2, 0, 501),
        (4, 1, 0, 238), (3, 4, 0, 72), (3, 3, 0, 528), (3, 2, 0, 640), (3, 1, 0, 72),
        (2, 4, 0, 132), (2, 3, 0, 264), (2, 2, 0, -20), (2, 1, 0, -24), (1, 4, 0, -48),
        (1, 3, 0, -480), (1, 2, 0, -400), (1, 1, 0, 160), (0, 4, 0, -192), (0, 3, 0, -384),
        (0, 2, 0, -64), (0, 1, 0, 128),
    ],
};

pub(crate) static NM3N_TABLE: KPolyTable = KPolyTable {
    denom_log2: 7,
    terms: &[
        (9, 1, 0, 3), (8, 2, 0, 13), (8, 1, 0, 27), (8, 0, 0, 44), (7, 3, 0, 20), (7, 2, 0, 104),
        (7, 1, 0, 388), (7, 0, 0, 352), (6, 4, 0, 10), (6, 3, 0, 140), (6, 2, 0, 1206),
        (6, 1, 0, 2212), (6, 0, 0, 80), (5, 4, 0, 60), (5, 3, 0, 1544), (5, 2, 0, 5780),
        (5, 1, 0, -1352), (5, 0, 0, -4448), (4, 4, 0, 712), (4, 3, 0, 6320), (4, 2, 0, -8664),
        (4, 1, 0, -27872), (4, 0, 0, -4864), (3, 4, 0, 2448), (3, 3, 0, -17248),
        (3, 2, 0, -71248), (3, 1, 0, -20192), (3, 0, 0, 16768), (2, 4, 0, -11072),
        (2, 3, 0, -75904), (2, 2, 0, -32704), (2, 1, 0, 67456), (2, 0, 0, 15360),
        (1, 4, 0, -26880), (1, 3, 0, 1536), (1, 2, 0, 91392), (1, 1, 0, 7680), (1, 0, 0, -18432),
        (0, 4, 0, 27648), (0, 3, 0, 55296), (0, 2, 0, -27648), (0, 1, 0, -55296),
    ],
};

#[cfg(test)]
pub(crate) static SPOT_CHECKS: &[(&KPolyTable, i64, i64, i64, &str)] = &[
    (&G1_TABLE, -1, 2, 5, "55944/1"),
    (&G1_TABLE, 1, 2, 0, "5400/1"),
    (&G1_TABLE, 3, 3, -1, "54054/1"),
    (&G1_TABLE, 5, 1, 7, "-824850/1"),
    (&G1_TABLE, 9, 4, 2, "-7315200/1"),
    (&G2_TABLE, -1, 2, 5, "2757573/1"),
    (&G2_TABLE, 1, 2, 0, "27000/1"),
    (&G2_TABLE, 3, 3, -1, "-1702701/1"),
    (&G2_TABLE, 5, 1, 7, "-98218575/1"),
    (&G2_TABLE, 9, 4, 2, "-1423359000/1"),
    (&G3_TABLE, -1, 2, 5, "11013975/4"),
    (&G3_TABLE, 1, 2, 0, "-2025/2"),
    (&G3_TABLE, 3, 3, -1, "-399735/8"),
    (&G3_TABLE, 5, 1, 7, "-892812375/8"),
    (&G3_TABLE, 9, 4, 2, "0/1"),
    (&B1N_TABLE, -1, 2, 5, "34682175/2"),
    (&B1N_TABLE, 1, 2, 0, "-675/1"),
    (&B1N_TABLE, 3, 3, -1, "47880/1"),
    (&B1N_TABLE, 5, 1, 7, "178142328/1"),
    (&B1N_TABLE, 9, 4, 2, "134643600/1"),
    (&B2N_TABLE, -1, 2, 5, "187110/1"),
    (&B2N_TABLE, 1, 2, 0, "51024/1"),
    (&B2N_TABLE, 3, 3, -1, "1377376/1"),
    (&B2N_TABLE, 5, 1, 7, "235008/1"),
    (&B2N_TABLE, 9, 4, 2, "-71058240/1"),
    (&DB_TABLE, -1, 2, 5, "-2619540/1"),
    (&DB_TABLE, 1, 2, 0, "16065/1"),
    (&DB_TABLE, 3, 3, -1, "1377376/1"),
    (&DB_TABLE, 5, 1, 7, "-207325008/1"),
    (&DB_TABLE, 9, 4, 2, "-612804150/1"),
    (&C1N_TABLE, -1, 2, 5, "-14372344350/1"),
    (&C1N_TABLE, 1, 2, 0, "-66830400/1"),
    (&C1N_TABLE, 3, 3, -1, "1772682912/1"),
    (&C1N_TABLE, 5, 1, 7, "1902220970832/1"),
    (&C1N_TABLE, 9, 4, 2, "19561811850000/1"),
    (&C2N_TABLE, -1, 2, 5, "-140107968/1"),
    (&C2N_TABLE, 1, 2, 0, "-367200/1"),
    (&C2N_TABLE, 3, 3, -1, "-16528512/1"),
    (&C2N_TABLE, 5, 1, 7, "8753722560/1"),
    (&C2N_TABLE, 9, 4, 2, "35385984000/1"),
    (&DC_TABLE, -1, 2, 5, "142733188125/2"),
    (&DC_TABLE, 1, 2, 0, "0/1"),
    (&DC_TABLE, 3, 3, -1, "10810800/1"),
    (&DC_TABLE, 5, 1, 7, "-3458705003208/1"),
    (&DC_TABLE, 9, 4, 2, "1898437905000/1"),
    (&NM2N_TABLE, -1, 2, 5, "-81/2"),
    (&NM2N_TABLE, 1, 2, 0, "425/1"),
    (&NM2N_TABLE, 3, 3, -1, "218589/1"),
    (&NM2N_TABLE, 5, 1, 7, "392931/2"),
    (&NM2N_TABLE, 9, 4, 2, "112663390/1"),
    (&NM3N_TABLE, -1, 2, 5, "38475/16"),
    (&NM3N_TABLE, 1, 2, 0, "-138915/32"),
    (&NM3N_TABLE, 3, 3, -1, "-2171043/128"),
    (&NM3N_TABLE, 5, 1, 7, "134812755/128"),
    (&NM3N_TABLE, 9, 4, 2, "19086793425/32"),
];
