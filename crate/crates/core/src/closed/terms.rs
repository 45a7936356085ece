//! Transcribed term lists for `n = 4` and `n = 5`.
//!
//! Atoms: `U`, `H` = hat(U), `T` = tilde(U), `C` = hat-tilde(U). A postfix `^`
//! applies the triangle conjugation to the preceding atom or group.
//! `C(k)` is `(-1)^(k+1)` times the sum of its list.

pub(super) const TERMS_N4: [&[&str]; 4] = [
    // C(1)
    &[
        "U", "C", "H^", "T^",
    ],
    // C(2)
    &[
        "UC", "UH^", "UT^", "CH^", "CT^", "(HT)^",
    ],
    // C(3)
    &[
        "UCH^", "UCT^", "U(HT)^", "C(HT)^",
    ],
    // C(4)
    &[
        "UC(HT)^",
    ],
];

pub(super) const TERMS_N5: [&[&str]; 8] = [
    // C(1)
    &[
        "U", "C", "H", "T", "H^", "T^", "U^", "C^",
    ],
    // C(2)
    &[
        "UC", "UH", "UT", "UH^", "UT^", "UU^", "UC^", "HT", "CT", "CH", "CT^", "CH^", "HH^",
        "CU^", "(HT)^", "(HU)^", "(HC)^", "TC^", "TU^", "TT^", "HT^", "(UC)^", "(TC)^", "(TU)^",
        "HU^", "HC^", "CC^", "TH^",
    ],
    // C(3)
    &[
        "UCH", "UCT", "UHT", "CHT", "UCH^", "UCT^", "UCU^", "UHH^", "UHT^", "UHU^", "UHC^",
        "UTH^", "CHH^", "CHT^", "HTH^", "HTT^", "HTU^", "HTC^", "UTT^", "UTU^", "UTC^", "CHU^",
        "CHC^", "CTH^", "CTT^", "CTU^", "CTC^", "UCC^", "H(HU)^", "U(HT)^", "U(HU)^", "U(HC)^",
        "U(TU)^", "U(TC)^", "U(UC)^", "C(HT)^", "C(HU)^", "C(HC)^", "C(TU)^", "C(TC)^",
        "C(UC)^", "H(HT)^", "H(HC)^", "H(TU)^", "H(TC)^", "H(UC)^", "T(HT)^", "T(HU)^",
        "T(HC)^", "T(TU)^", "T(TC)^", "T(UC)^", "(HTU)^", "(HTC)^", "(HUC)^", "(TUC)^",
    ],
    // C(4)
    &[
        "UCHT", "UCHH^", "UCHT^", "UCHU^", "UCHC^", "UCTH^", "UCTT^", "UCTU^", "UCTC^", "UHTH^",
        "UHTT^", "UHTU^", "CHTT^", "CHTU^", "CHTC^", "UHTC^", "CH(HT)^", "CH(HU)^", "UC(TU)^",
        "UC(TC)^", "UC(UC)^", "UC(HT)^", "UC(HU)^", "UC(HC)^", "UH(HT)^", "UH(HU)^", "UH(HC)^",
        "UH(TU)^", "UH(TC)^", "CH(HC)^", "UH(UC)^", "UT(HT)^", "UT(HU)^", "UT(HC)^", "UT(TU)^",
        "UT(TC)^", "UT(UC)^", "U(HTU)^", "U(HTC)^", "U(HUC)^", "U(TUC)^", "CHTH^", "CH(TU)^",
        "CH(TC)^", "CH(UC)^", "CT(HT)^", "CT(HU)^", "CT(HC)^", "CT(TU)^", "CT(TC)^", "CT(UC)^",
        "C(HTU)^", "C(HTC)^", "C(HUC)^", "C(TUC)^", "HT(HT)^", "HT(HU)^", "HT(HC)^", "HT(TU)^",
        "HT(TC)^", "HT(UC)^", "H(HTU)^", "H(HTC)^", "H(HUC)^", "H(TUC)^", "T(HTU)^", "T(HTC)^",
        "T(HUC)^", "T(TUC)^", "(HTUC)^",
    ],
    // C(5)
    &[
        "UCHTH^", "UCHTT^", "UCHTU^", "UCHTC^", "UCH(HT)^", "UCH(HU)^", "UCH(HC)^", "UCH(TU)^",
        "UCH(TC)^", "UCH(UC)^", "UCT(HT)^", "UCT(HU)^", "UCT(HC)^", "UCT(TU)^", "UCT(TC)^",
        "UCT(UC)^", "UC(HTU)^", "UC(HTC)^", "UC(HUC)^", "UC(TUC)^", "UHT(HT)^", "UHT(HU)^",
        "UHT(HC)^", "UHT(TU)^", "UHT(TC)^", "UHT(UC)^", "UH(HTU)^", "UH(HTC)^", "UH(HUC)^",
        "UH(TUC)^", "UT(HTU)^", "UT(HTC)^", "UT(HUC)^", "UT(TUC)^", "U(HTUC)^", "CHT(HT)^",
        "CHT(HU)^", "CHT(HC)^", "CHT(TU)^", "CHT(TC)^", "CHT(UC)^", "CH(HTU)^", "CH(HTC)^",
        "CH(HUC)^", "CH(TUC)^", "CT(HTU)^", "CT(HTC)^", "CT(HUC)^", "CT(TUC)^", "C(HTUC)^",
        "HT(HTU)^", "HT(HTC)^", "HT(HUC)^", "HT(TUC)^", "H(HTUC)^", "T(HTUC)^",
    ],
    // C(6)
    &[
        "UCHT(HT)^", "UCHT(HU)^", "UCHT(HC)^", "UCHT(TU)^", "UCHT(TC)^", "UCHT(UC)^",
        "UCH(HTU)^", "UCH(HTC)^", "UCH(HUC)^", "UCH(TUC)^", "UCT(HTU)^", "UCT(HTC)^",
        "UCT(HUC)^", "UCT(TUC)^", "UC(HTUC)^", "UHT(HTU)^", "UHT(HTC)^", "UHT(HUC)^",
        "UHT(TUC)^", "UH(HTUC)^", "UT(HTUC)^", "CHT(HTU)^", "CHT(HTC)^", "CHT(HUC)^",
        "CHT(TUC)^", "CH(HTUC)^", "CT(HTUC)^", "HT(HTUC)^",
    ],
    // C(7)
    &[
        "UCHT(HTU)^", "UCHT(HTC)^", "UCHT(HUC)^", "UCHT(TUC)^", "UCH(HTUC)^", "UCT(HTUC)^",
        "UHT(HTUC)^", "CHT(HTUC)^",
    ],
    // C(8)
    &[
        "UCHT(HTUC)^",
    ],
];
