//! Reference values for the expansion: the coefficient ledger, the
//! Greek identities, the six coordinate specializations and the regrouped
//! forms used by the self-check.

/// `(word, (xy)^2, x^2 y^2, (xy)^2 - x^2 y^2)`, one row per formal word.
pub const LEDGER: [(&str, &str, &str, &str); 81] = [
    ("e", "a^2u^2i", "a^2u^2i", "0"),
    ("f", "b^2v^2j", "b^2v^2j", "0"),
    ("g", "c^2w^2k", "c^2w^2k", "0"),
    ("A", "abuvij", "a^2v^2ij", "av(bu-av)ij"),
    ("B", "acuwik", "a^2w^2ik", "aw(cu-aw)ik"),
    ("C", "abuvij", "b^2u^2ij", "bu(av-bu)ij"),
    ("D", "bcvwjk", "b^2w^2jk", "bw(cv-bw)jk"),
    ("E", "acuwik", "c^2u^2ik", "cu(aw-cu)ik"),
    ("F", "bcvwjk", "c^2v^2jk", "cv(bw-cv)jk"),
    ("eA", "a^2uvi", "a^2uvi", "0"),
    ("eB", "a^2uwi", "a^2uwi", "0"),
    ("eC", "abu^2i", "a^2uvi", "au(bu-av)i"),
    ("eD", "abuwi", "a^2vwi", "aw(bu-av)i"),
    ("eE", "acu^2i", "a^2uwi", "au(cu-aw)i"),
    ("eF", "acuvi", "a^2vwi", "av(cu-aw)i"),
    ("fA", "abv^2j", "b^2uvj", "bv(av-bu)j"),
    ("fB", "abvwj", "b^2uwj", "bw(av-bu)j"),
    ("fC", "b^2uvj", "b^2uvj", "0"),
    ("fD", "b^2vwj", "b^2vwj", "0"),
    ("fE", "bcuvj", "b^2uwj", "bu(cv-bw)j"),
    ("fF", "bcv^2j", "b^2vwj", "bv(cv-bw)j"),
    ("gA", "acvwk", "c^2uvk", "cv(aw-cu)k"),
    ("gB", "acw^2k", "c^2uwk", "cw(aw-cu)k"),
    ("gC", "bcuwk", "c^2uvk", "cu(bw-cv)k"),
    ("gD", "bcw^2k", "c^2vwk", "cw(bw-cv)k"),
    ("gE", "c^2uwk", "c^2uwk", "0"),
    ("gF", "c^2vwk", "c^2vwk", "0"),
    ("Ae", "a^2uvi", "abu^2i", "au(av-bu)i"),
    ("Be", "a^2uwi", "acu^2i", "au(aw-cu)i"),
    ("Ce", "abu^2i", "abu^2i", "0"),
    ("De", "abuwi", "bcu^2i", "bu(aw-cu)i"),
    ("Ee", "acu^2i", "acu^2i", "0"),
    ("Fe", "acuvi", "bcu^2i", "cu(av-bu)i"),
    ("Af", "abv^2j", "abv^2j", "0"),
    ("Bf", "abvwj", "acv^2j", "av(bw-cv)j"),
    ("Cf", "b^2uvj", "abv^2j", "bv(bu-av)j"),
    ("Df", "b^2vwj", "bcv^2j", "bv(bw-cv)j"),
    ("Ef", "bcuvj", "acv^2j", "cv(bu-av)j"),
    ("Ff", "bcv^2j", "bcv^2j", "0"),
    ("Ag", "acvwk", "abw^2k", "aw(cv-bw)k"),
    ("Bg", "acw^2k", "acw^2k", "0"),
    ("Cg", "bcuwk", "abw^2k", "bw(cu-aw)k"),
    ("Dg", "bcw^2k", "bcw^2k", "0"),
    ("Eg", "c^2uwk", "acw^2k", "cw(cu-aw)k"),
    ("Fg", "c^2vwk", "bcw^2k", "cw(cv-bw)k"),
    ("A^2", "a^2v^2", "abuv", "av(av-bu)"),
    ("B^2", "a^2w^2", "acuw", "aw(aw-cu)"),
    ("C^2", "b^2u^2", "abuv", "bu(bu-av)"),
    ("D^2", "b^2w^2", "bcvw", "bw(bw-cv)"),
    ("E^2", "c^2u^2", "acuw", "cu(cu-aw)"),
    ("F^2", "c^2v^2", "bcvw", "cv(cv-bw)"),
    ("AB", "a^2vw", "abuw", "aw(av-bu)"),
    ("AC", "abuv", "abuv", "0"),
    ("AD", "abvw", "abvw", "0"),
    ("AE", "acuv", "abuw", "au(cv-bw)"),
    ("AF", "acv^2", "abvw", "av(cv-bw)"),
    ("BA", "a^2vw", "acuv", "av(aw-cu)"),
    ("CA", "abuv", "abuv", "0"),
    ("DA", "abvw", "bcuv", "bv(aw-cu)"),
    ("EA", "acuv", "acuv", "0"),
    ("FA", "acv^2", "bcuv", "cv(av-bu)"),
    ("BC", "abuw", "acuv", "au(bw-cv)"),
    ("BD", "abw^2", "acvw", "aw(bw-cv)"),
    ("BE", "acuw", "acuw", "0"),
    ("BF", "acvw", "acvw", "0"),
    ("CB", "abuw", "abuw", "0"),
    ("DB", "abw^2", "bcuw", "bw(aw-cu)"),
    ("EB", "acuw", "acuw", "0"),
    ("FB", "acvw", "bcuw", "cw(av-bu)"),
    ("CD", "b^2uw", "abvw", "bw(bu-av)"),
    ("CE", "bcu^2", "abuw", "bu(cu-aw)"),
    ("CF", "bcuv", "abvw", "bv(cu-aw)"),
    ("DC", "b^2uw", "bcuv", "bu(bw-cv)"),
    ("EC", "bcu^2", "acuv", "cu(bu-av)"),
    ("FC", "bcuv", "bcuv", "0"),
    ("DE", "bcuw", "bcuw", "0"),
    ("DF", "bcvw", "bcvw", "0"),
    ("ED", "bcuw", "acvw", "cw(bu-av)"),
    ("FD", "bcvw", "bcvw", "0"),
    ("EF", "c^2uv", "acvw", "cv(cu-aw)"),
    ("FE", "c^2uv", "bcuw", "cu(cv-bw)"),
];

/// The six linear relations among the Greek polynomials, as `lhs = rhs`.
pub const GREEK_IDENTITIES: [(&str, &str); 6] = [
    ("α-δ", "β"),
    ("γ-ζ", "-ε"),
    ("η-θ", "-ι"),
    ("κ-μ", "-ε"),
    ("λ-ν", "β"),
    ("ξ-π", "-ι"),
];

/// One coordinate specialization of the difference expansion.
pub struct Case {
    pub label: &'static str,
    /// Indeterminate names and their integer values.
    pub bindings: [(char, i64); 3],
    /// The two Greek names that survive and their common value; the other
    /// thirteen vanish.
    pub nonzero_greek: [&'static str; 2],
    pub greek_value: &'static str,
    /// The five grouped parts of the specialized difference, in order.
    pub parts: [&'static str; 5],
    /// The full specialized difference, regrouped by coordinate monomial.
    pub regrouped: &'static str,
    /// The element relations that endo-commutativity forces, as `lhs = rhs`.
    pub relations: [(&'static str, &'static str); 5],
}

pub const CASES: [Case; 6] = [
    Case {
        label: "i",
        bindings: [('a', 1), ('b', 0), ('c', 0)],
        nonzero_greek: ["alpha", "delta"],
        greek_value: "vw",
        parts: [
            "-v^2ijA-w^2ikB",
            "-uvieC-vwie(D+F)-uwieE",
            "uviAe+uwiBe",
            "v^2A^2+w^2B^2",
            "vw(AB+BA)",
        ],
        regrouped: "v^2(A^2-ijA)+w^2(B^2-ikB)+uvi(Ae-eC)+vw{AB+BA-ie(D+F)}+uwi(Be-eE)",
        relations: [
            ("A^2", "ijA"),
            ("B^2", "ikB"),
            ("AB+BA", "ie(D+F)"),
            ("iAe", "ieC"),
            ("iBe", "ieE"),
        ],
    },
    Case {
        label: "ii",
        bindings: [('b', 1), ('a', 0), ('c', 0)],
        nonzero_greek: ["kappa", "mu"],
        greek_value: "uw",
        parts: [
            "-u^2ijC-w^2jkD",
            "-uvjfA-uwjf(B+E)-vwjfF",
            "uvjCf+vwjDf",
            "u^2C^2+w^2D^2",
            "uw(CD+DC)",
        ],
        regrouped: "u^2(C^2-ijC)+w^2(D^2-jkD)+uvj(Cf-fA)+uw{CD+DC-jf(B+E)}+vwj(Df-fF)",
        relations: [
            ("C^2", "ijC"),
            ("D^2", "jkD"),
            ("CD+DC", "jf(B+E)"),
            ("jCf", "jfA"),
            ("jDf", "jfF"),
        ],
    },
    Case {
        label: "iii",
        bindings: [('c', 1), ('a', 0), ('b', 0)],
        nonzero_greek: ["xi", "pi"],
        greek_value: "uv",
        parts: [
            "-u^2ikE-v^2jkF",
            "-uvkg(A+C)-uwkgB-vwkgD",
            "uwkEg+vwkFg",
            "u^2E^2+v^2F^2",
            "uv(EF+FE)",
        ],
        regrouped: "u^2(E^2-ikE)+v^2(F^2-jkF)+uv{EF+FE-kg(A+C)}+uwk(Eg-gB)+vwk(Fg-gD)",
        relations: [
            ("E^2", "ikE"),
            ("F^2", "jkF"),
            ("EF+FE", "kg(A+C)"),
            ("kEg", "kgB"),
            ("kFg", "kgD"),
        ],
    },
    Case {
        label: "iv",
        bindings: [('u', 1), ('v', 0), ('w', 0)],
        nonzero_greek: ["lambda", "nu"],
        greek_value: "bc",
        parts: [
            "-b^2ijC-c^2ikE",
            "abieC+acieE",
            "-abiAe-aciBe-bciDe-bciFe",
            "b^2C^2+c^2E^2",
            "bc(CE+EC)",
        ],
        regrouped: "b^2(C^2-ijC)+c^2(E^2-ikE)+abi(eC-Ae)+aci(eE-Be)+bc{CE+EC-i(D+F)e}",
        relations: [
            ("C^2", "ijC"),
            ("E^2", "ikE"),
            ("CE+EC", "i(D+F)e"),
            ("ieC", "iAe"),
            ("ieE", "iBe"),
        ],
    },
    Case {
        label: "v",
        bindings: [('v', 1), ('u', 0), ('w', 0)],
        nonzero_greek: ["gamma", "zeta"],
        greek_value: "ac",
        parts: [
            "-a^2ijA-c^2jkF",
            "abjfA+bcjfF",
            "-acjBf-abjCf-bcjDf-acjEf",
            "a^2A^2+c^2F^2",
            "ac(AF+FA)",
        ],
        regrouped: "a^2(A^2-ijA)+c^2(F^2-jkF)+abj(fA-Cf)+bcj(fF-Df)+ac{AF+FA-j(B+E)f}",
        relations: [
            ("A^2", "ijA"),
            ("F^2", "jkF"),
            ("AF+FA", "j(B+E)f"),
            ("jfA", "jCf"),
            ("jfF", "jDf"),
        ],
    },
    Case {
        label: "vi",
        bindings: [('w', 1), ('u', 0), ('v', 0)],
        nonzero_greek: ["eta", "theta"],
        greek_value: "ab",
        parts: [
            "-a^2ikB-b^2jkD",
            "ackgB+bckgD",
            "-abkAg-abkCg-ackEg-bckFg",
            "a^2B^2+b^2D^2",
            "ab(BD+DB)",
        ],
        regrouped: "a^2(B^2-ikB)+b^2(D^2-jkD)+ack(gB-Eg)+ab{BD+DB-k(A+C)g}+bck(gD-Fg)",
        relations: [
            ("B^2", "ikB"),
            ("D^2", "jkD"),
            ("BD+DB", "k(A+C)g"),
            ("kgB", "kEg"),
            ("kgD", "kFg"),
        ],
    },
];

/// The parameter-parameter part of the difference written with the Greek
/// shorthand.
pub const GREEK_PARAM_PART: &str =
    "αAB+β(AE-BC)+γAF+δBA+ε(DA-CF)+ζFA+ηBD+θDB+ι(FB-ED)+κCD+λCE+μDC+νEC+ξEF+πFE";

/// The mixed basis-parameter parts rewritten with the Greek shorthand.
pub const GREEK_MIXED_PARTS: [&str; 2] = [
    "au(bu-av)ieC-αieD+au(cu-aw)ieE-δieF+bv(av-bu)jfA-κjfB-μjfE+bv(cv-bw)jfF-ξkgA+cw(aw-cu)kgB-πkgC+cw(bw-cv)kgD",
    "au(av-bu)iAe+au(aw-cu)iBe-λiDe-νiFe-γjBf+bv(bu-av)jCf+bv(bw-cv)jDf-ζjEf-ηkAg-θkCg+cw(cu-aw)kEg+cw(cv-bw)kFg",
];

/// The difference on tables satisfying the first set of relations, as three
/// Greek-weighted element combinations.
pub const RECOMBINED: [(&str, &str); 3] = [
    ("beta", "AE-BC-BA+ieF-EC+iFe"),
    ("epsilon", "DA-CF+FA-jEf+DC-jfE"),
    ("iota", "-kCg+DB+FB-ED+FE-kgC"),
];
