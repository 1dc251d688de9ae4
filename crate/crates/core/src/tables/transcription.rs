//! Printed pre-measurement states, gates and product-state expansions, entered
//! exactly as typeset.
//!
//! Reading rules, applied uniformly:
//! - A leading fraction with no bracket after it multiplies every following
//!   summand; a leading minus sign stays with the first summand
//!   (`−1/2|0⟩⟨0| + |1⟩⟨1|` is read as `1/2[−|0⟩⟨0| + |1⟩⟨1|]`).
//! - An unclosed or unopened bracket is read as spanning to the end of the entry.
//! - A summand that is not an operator element (a ket multiplied by a ket) is
//!   omitted and noted.
//!
//! The channel-IX lists are keyed by position in the printed list, not by label.

/// A printed numeric factor: `num/(den·√radicand)` when `inverted`, else `num·√radicand/den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lit {
    pub num: i64,
    pub den: i64,
    pub radicand: u32,
    pub inverted: bool,
}

impl Lit {
    pub const fn over(num: i64, den: i64, radicand: u32) -> Lit {
        Lit { num, den, radicand, inverted: true }
    }

    pub const fn times(num: i64, den: i64, radicand: u32) -> Lit {
        Lit { num, den, radicand, inverted: false }
    }

    pub const fn int(num: i64) -> Lit {
        Lit::over(num, 1, 1)
    }

    pub const fn neg(self) -> Lit {
        Lit { num: -self.num, ..self }
    }
}

/// `coef·c_amp|ket⟩`.
#[derive(Clone, Copy, Debug)]
pub struct StateTerm {
    pub coef: i64,
    pub amp: usize,
    pub ket: usize,
}

/// `coef·|ket⟩⟨bra|`.
#[derive(Clone, Copy, Debug)]
pub struct OpTerm {
    pub coef: i64,
    pub ket: usize,
    pub bra: usize,
}

/// `coef·|Ψ_psi⟩`.
#[derive(Clone, Copy, Debug)]
pub struct PsiTerm {
    pub coef: Lit,
    pub psi: usize,
}

const fn c(coef: i64, amp: usize, ket: usize) -> StateTerm {
    StateTerm { coef, amp, ket }
}

const fn o(coef: i64, ket: usize, bra: usize) -> OpTerm {
    OpTerm { coef, ket, bra }
}

const fn p(coef: Lit, psi: usize) -> PsiTerm {
    PsiTerm { coef, psi }
}

#[derive(Clone, Copy, Debug)]
pub struct StateText {
    pub location: &'static str,
    pub label: &'static str,
    pub prefactor: Lit,
    pub terms: &'static [StateTerm],
    pub notes: &'static str,
}

#[derive(Clone, Copy, Debug)]
pub struct GateText {
    pub location: &'static str,
    pub label: &'static str,
    pub prefactor: Lit,
    pub terms: &'static [OpTerm],
    pub notes: &'static str,
}

#[derive(Clone, Copy, Debug)]
pub struct ExpansionText {
    pub location: &'static str,
    pub label: &'static str,
    pub a2: usize,
    pub b: usize,
    pub prefactor: Lit,
    pub terms: &'static [PsiTerm],
    pub notes: &'static str,
}

const THIRD: Lit = Lit::over(1, 3, 1);
const SIXTH: Lit = Lit::over(1, 6, 1);
const HALF: Lit = Lit::over(1, 2, 1);
const NEG_HALF: Lit = Lit::over(-1, 2, 1);
const INV_SQRT2: Lit = Lit::over(1, 1, 2);
const INV_SQRT3: Lit = Lit::over(1, 1, 3);
const INV_SQRT6: Lit = Lit::over(1, 1, 6);
const INV_2SQRT3: Lit = Lit::over(1, 2, 3);
const INV_3SQRT2: Lit = Lit::over(1, 3, 2);
const ONE: Lit = Lit::int(1);

const NO_BRACKETS: &str =
    "printed without brackets; the leading fraction is read as multiplying every summand";

macro_rules! state {
    ($loc:expr, $label:expr, $pre:expr, [$($t:expr),* $(,)?]) => {
        state!($loc, $label, $pre, [$($t),*], "")
    };
    ($loc:expr, $label:expr, $pre:expr, [$($t:expr),* $(,)?], $notes:expr) => {
        StateText { location: $loc, label: $label, prefactor: $pre, terms: &[$($t),*], notes: $notes }
    };
}

macro_rules! gate {
    ($loc:expr, $label:expr, $pre:expr, [$($t:expr),* $(,)?]) => {
        gate!($loc, $label, $pre, [$($t),*], "")
    };
    ($loc:expr, $label:expr, $pre:expr, [$($t:expr),* $(,)?], $notes:expr) => {
        GateText { location: $loc, label: $label, prefactor: $pre, terms: &[$($t),*], notes: $notes }
    };
}

/// Product-state expansions, in printed order (4a)–(4i).
pub static EXPANSIONS: [ExpansionText; 9] = [
    ExpansionText {
        location: "Eq. (4a)",
        label: "|0_{A2}⟩|0_B⟩",
        a2: 0,
        b: 0,
        prefactor: INV_SQRT3,
        terms: &[p(ONE, 0), p(Lit::times(-1, 1, 2), 8)],
        notes: "",
    },
    ExpansionText {
        location: "Eq. (4b)",
        label: "|1_{A2}⟩|1_B⟩",
        a2: 1,
        b: 1,
        prefactor: INV_SQRT3,
        terms: &[p(ONE, 0), p(Lit::times(-1, 2, 6), 3), p(INV_SQRT2, 8)],
        notes: "√(3/2) stored as √6/2",
    },
    ExpansionText {
        location: "Eq. (4c)",
        label: "|1_{A2}⟩|0_B⟩",
        a2: 1,
        b: 0,
        prefactor: INV_SQRT2,
        terms: &[p(ONE, 1), p(ONE, 2)],
        notes: "",
    },
    ExpansionText {
        location: "Eq. (4d)",
        label: "|0_{A2}⟩|1_B⟩",
        a2: 0,
        b: 1,
        prefactor: INV_SQRT2,
        terms: &[p(ONE, 1), p(Lit::int(-1), 2)],
        notes: "",
    },
    ExpansionText {
        location: "Eq. (4e)",
        label: "|2_{A2}⟩|0_B⟩",
        a2: 2,
        b: 0,
        prefactor: INV_SQRT2,
        terms: &[p(ONE, 4), p(ONE, 5)],
        notes: "",
    },
    ExpansionText {
        location: "Eq. (4f)",
        label: "|0_{A2}⟩|2_B⟩",
        a2: 0,
        b: 2,
        prefactor: INV_SQRT2,
        terms: &[p(ONE, 4), p(Lit::int(-1), 5)],
        notes: "",
    },
    ExpansionText {
        location: "Eq. (4g)",
        label: "|2_{A2}⟩|1_B⟩",
        a2: 2,
        b: 1,
        prefactor: INV_SQRT2,
        terms: &[p(ONE, 6), p(ONE, 7)],
        notes: "",
    },
    ExpansionText {
        location: "Eq. (4h)",
        label: "|1_{A2}⟩|2_B⟩",
        a2: 1,
        b: 2,
        prefactor: INV_SQRT2,
        terms: &[p(ONE, 6), p(Lit::int(-1), 7)],
        notes: "",
    },
    ExpansionText {
        location: "Eq. (4i)",
        label: "|2_{A2}⟩|2_B⟩",
        a2: 2,
        b: 2,
        prefactor: INV_SQRT3,
        terms: &[p(ONE, 0), p(Lit::times(1, 2, 6), 3), p(INV_SQRT2, 8)],
        notes: "√(3/2) stored as √6/2",
    },
];

/// Pre-measurement states `[channel][position]`.
pub static PREMEASURE: [[StateText; 9]; 9] = [
    [
        state!("Eq. (10a)", "|s_0^0⟩_B", THIRD, [c(1, 0, 0), c(1, 1, 1), c(1, 2, 2)]),
        state!("Eq. (10b)", "|s_0^1⟩_B", INV_SQRT6, [c(1, 1, 0), c(1, 0, 1)]),
        state!("Eq. (10c)", "|s_0^2⟩_B", INV_SQRT6, [c(1, 1, 0), c(-1, 0, 1)]),
        state!("Eq. (10d)", "|s_0^3⟩_B", INV_SQRT6, [c(-1, 1, 1), c(1, 2, 2)]),
        state!("Eq. (10e)", "|s_0^4⟩_B", INV_SQRT6, [c(1, 2, 0), c(1, 0, 2)]),
        state!("Eq. (10f)", "|s_0^5⟩_B", INV_SQRT6, [c(1, 2, 0), c(-1, 0, 2)]),
        state!("Eq. (10g)", "|s_0^6⟩_B", INV_SQRT6, [c(1, 2, 1), c(1, 1, 2)]),
        state!("Eq. (10h)", "|s_0^7⟩_B", INV_SQRT6, [c(1, 2, 1), c(-1, 1, 2)]),
        state!("Eq. (10i)", "|s_0^8⟩_B", INV_3SQRT2, [c(-2, 0, 0), c(1, 1, 1), c(1, 2, 2)]),
    ],
    [
        state!("Appendix (i), |s_1^0⟩_B", "|s_1^0⟩_B", INV_SQRT6, [c(1, 0, 1), c(1, 1, 0)]),
        state!("Appendix (i), |s_1^1⟩_B", "|s_1^1⟩_B", HALF, [c(1, 0, 0), c(1, 1, 1)]),
        state!("Appendix (i), |s_1^2⟩_B", "|s_1^2⟩_B", HALF, [c(-1, 0, 0), c(1, 1, 1)]),
        state!("Appendix (i), |s_1^3⟩_B", "|s_1^3⟩_B", NEG_HALF, [c(1, 1, 0)]),
        state!("Appendix (i), |s_1^4⟩_B", "|s_1^4⟩_B", HALF, [c(1, 2, 1)]),
        state!("Appendix (i), |s_1^5⟩_B", "|s_1^5⟩_B", HALF, [c(1, 2, 1)]),
        state!("Appendix (i), |s_1^6⟩_B", "|s_1^6⟩_B", HALF, [c(1, 2, 0)]),
        state!("Appendix (i), |s_1^7⟩_B", "|s_1^7⟩_B", HALF, [c(1, 2, 0)]),
        state!("Appendix (i), |s_1^8⟩_B", "|s_1^8⟩_B", INV_2SQRT3, [c(1, 1, 0), c(-2, 0, 1)]),
    ],
    [
        state!("Appendix (ii), |s_2^0⟩_B", "|s_2^0⟩_B", INV_SQRT6, [c(1, 1, 0), c(-1, 0, 1)]),
        state!("Appendix (ii), |s_2^1⟩_B", "|s_2^1⟩_B", HALF, [c(1, 0, 0), c(-1, 1, 1)]),
        state!("Appendix (ii), |s_2^2⟩_B", "|s_2^2⟩_B", NEG_HALF, [c(1, 0, 0), c(1, 1, 1)]),
        state!("Appendix (ii), |s_2^3⟩_B", "|s_2^3⟩_B", NEG_HALF, [c(1, 1, 0)]),
        state!("Appendix (ii), |s_2^4⟩_B", "|s_2^4⟩_B", NEG_HALF, [c(1, 2, 1)]),
        state!("Appendix (ii), |s_2^5⟩_B", "|s_2^5⟩_B", NEG_HALF, [c(1, 2, 1)]),
        state!("Appendix (ii), |s_2^6⟩_B", "|s_2^6⟩_B", HALF, [c(1, 2, 0)]),
        state!("Appendix (ii), |s_2^7⟩_B", "|s_2^7⟩_B", HALF, [c(1, 2, 0)]),
        state!("Appendix (ii), |s_2^8⟩_B", "|s_2^8⟩_B", INV_2SQRT3, [c(2, 0, 1), c(1, 1, 0)]),
    ],
    [
        state!("Appendix (iii), |s_3^0⟩_B", "|s_3^0⟩_B", INV_SQRT6, [c(-1, 1, 1), c(1, 2, 2)]),
        state!("Appendix (iii), |s_3^1⟩_B", "|s_3^1⟩_B", NEG_HALF, [c(1, 0, 1)]),
        state!("Appendix (iii), |s_3^2⟩_B", "|s_3^2⟩_B", HALF, [c(1, 0, 1)]),
        state!("Appendix (iii), |s_3^3⟩_B", "|s_3^3⟩_B", HALF, [c(1, 1, 1), c(1, 2, 2)]),
        state!("Appendix (iii), |s_3^4⟩_B", "|s_3^4⟩_B", HALF, [c(1, 0, 2)]),
        state!("Appendix (iii), |s_3^5⟩_B", "|s_3^5⟩_B", NEG_HALF, [c(1, 0, 2)]),
        state!("Appendix (iii), |s_3^6⟩_B", "|s_3^6⟩_B", HALF, [c(1, 1, 2), c(-1, 2, 1)]),
        state!(
            "Appendix (iii), |s_3^7⟩_B",
            "|s_3^7⟩_B",
            NEG_HALF,
            [c(1, 1, 2), c(1, 2, 1)],
            "second ket printed as |1_B⟩_B"
        ),
        state!("Appendix (iii), |s_3^8⟩_B", "|s_3^8⟩_B", INV_2SQRT3, [c(-1, 1, 1), c(1, 2, 2)]),
    ],
    [
        state!("Appendix (iv), |s_4^0⟩_B", "|s_4^0⟩_B", INV_SQRT6, [c(1, 0, 2), c(1, 2, 0)]),
        state!("Appendix (iv), |s_4^1⟩_B", "|s_4^1⟩_B", HALF, [c(1, 1, 2)]),
        state!("Appendix (iv), |s_4^2⟩_B", "|s_4^2⟩_B", HALF, [c(1, 1, 2)]),
        state!("Appendix (iv), |s_4^3⟩_B", "|s_4^3⟩_B", HALF, [c(1, 2, 0)]),
        state!("Appendix (iv), |s_4^4⟩_B", "|s_4^4⟩_B", HALF, [c(1, 2, 2), c(1, 0, 0)]),
        state!("Appendix (iv), |s_4^5⟩_B", "|s_4^5⟩_B", HALF, [c(1, 2, 2), c(-1, 0, 0)]),
        state!("Appendix (iv), |s_4^6⟩_B", "|s_4^6⟩_B", HALF, [c(1, 1, 0)]),
        state!("Appendix (iv), |s_4^7⟩_B", "|s_4^7⟩_B", NEG_HALF, [c(1, 1, 0)]),
        state!("Appendix (iv), |s_4^8⟩_B", "|s_4^8⟩_B", INV_2SQRT3, [c(1, 2, 0), c(-2, 0, 2)]),
    ],
    [
        state!("Appendix (v), |s_5^0⟩_B", "|s_5^0⟩_B", INV_SQRT6, [c(1, 2, 0), c(-1, 0, 2)]),
        state!("Appendix (v), |s_5^1⟩_B", "|s_5^1⟩_B", NEG_HALF, [c(1, 1, 2)]),
        state!("Appendix (v), |s_5^2⟩_B", "|s_5^2⟩_B", NEG_HALF, [c(1, 1, 2)]),
        state!("Appendix (v), |s_5^3⟩_B", "|s_5^3⟩_B", HALF, [c(1, 2, 0)]),
        state!("Appendix (v), |s_5^4⟩_B", "|s_5^4⟩_B", HALF, [c(1, 0, 0), c(-1, 2, 2)]),
        state!("Appendix (v), |s_5^5⟩_B", "|s_5^5⟩_B", NEG_HALF, [c(1, 0, 0), c(1, 2, 2)]),
        state!("Appendix (v), |s_5^6⟩_B", "|s_5^6⟩_B", HALF, [c(1, 1, 0)]),
        state!("Appendix (v), |s_5^7⟩_B", "|s_5^7⟩_B", NEG_HALF, [c(1, 1, 0)]),
        state!("Appendix (v), |s_5^8⟩_B", "|s_5^8⟩_B", INV_2SQRT3, [c(2, 0, 2), c(1, 2, 0)]),
    ],
    [
        state!("Appendix (vi), |s_6^0⟩_B", "|s_6^0⟩_B", INV_SQRT6, [c(1, 1, 0), c(1, 2, 1)]),
        state!("Appendix (vi), |s_6^1⟩_B", "|s_6^1⟩_B", HALF, [c(1, 0, 0)]),
        state!("Appendix (vi), |s_6^2⟩_B", "|s_6^2⟩_B", NEG_HALF, [c(1, 0, 0)]),
        state!("Appendix (vi), |s_6^3⟩_B", "|s_6^3⟩_B", HALF, [c(1, 2, 1), c(-1, 1, 0)]),
        state!("Appendix (vi), |s_6^4⟩_B", "|s_6^4⟩_B", HALF, [c(1, 0, 1)]),
        state!("Appendix (vi), |s_6^5⟩_B", "|s_6^5⟩_B", NEG_HALF, [c(1, 0, 1)]),
        state!("Appendix (vi), |s_6^6⟩_B", "|s_6^6⟩_B", HALF, [c(1, 2, 0), c(1, 1, 1)]),
        state!("Appendix (vi), |s_6^7⟩_B", "|s_6^7⟩_B", NEG_HALF, [c(1, 2, 0), c(-1, 1, 1)]),
        state!("Appendix (vi), |s_6^8⟩_B", "|s_6^8⟩_B", INV_2SQRT3, [c(1, 2, 1), c(1, 1, 0)]),
    ],
    [
        state!("Appendix (vii), |s_7^0⟩_B", "|s_7^0⟩_B", INV_SQRT6, [c(1, 2, 1), c(-1, 1, 0)]),
        state!("Appendix (vii), |s_7^1⟩_B", "|s_7^1⟩_B", NEG_HALF, [c(1, 0, 0)]),
        state!("Appendix (vii), |s_7^2⟩_B", "|s_7^2⟩_B", HALF, [c(1, 0, 0)]),
        state!(
            "Appendix (vii), |s_7^3⟩_B",
            "|s_7^3⟩_B",
            HALF,
            [c(1, 1, 0), c(1, 2, 1)],
            "closing bracket printed without an opening one; read as 1/2[c1|0⟩ + c2|1⟩]"
        ),
        state!("Appendix (vii), |s_7^4⟩_B", "|s_7^4⟩_B", HALF, [c(1, 0, 1)]),
        state!("Appendix (vii), |s_7^5⟩_B", "|s_7^5⟩_B", NEG_HALF, [c(1, 0, 1)]),
        state!("Appendix (vii), |s_7^6⟩_B", "|s_7^6⟩_B", HALF, [c(1, 1, 1), c(-1, 2, 0)]),
        state!("Appendix (vii), |s_7^7⟩_B", "|s_7^7⟩_B", NEG_HALF, [c(1, 1, 1), c(1, 2, 0)]),
        state!("Appendix (vii), |s_7^8⟩_B", "|s_7^8⟩_B", INV_2SQRT3, [c(1, 2, 1), c(-1, 1, 0)]),
    ],
    [
        state!(
            "Appendix (viii), position 1",
            "|s_8^0⟩_B",
            INV_3SQRT2,
            [c(1, 1, 1), c(-2, 0, 2)]
        ),
        state!(
            "Appendix (viii), position 2",
            "|s_8^1⟩_B",
            INV_2SQRT3,
            [c(1, 0, 1), c(-2, 1, 0)],
            "closing bracket missing"
        ),
        state!(
            "Appendix (viii), position 3",
            "|s_8^2⟩_B",
            INV_2SQRT3.neg(),
            [c(1, 0, 1), c(2, 1, 0)]
        ),
        state!("Appendix (viii), position 4", "|s_8^3⟩_B", INV_2SQRT3.neg(), [c(1, 1, 1)]),
        state!(
            "Appendix (viii), position 5",
            "|s_8^8⟩_B",
            INV_2SQRT3,
            [c(1, 0, 2), c(-2, 2, 0)],
            "printed label s_8^8 at the fifth position; s_8^8 is printed again at the ninth"
        ),
        state!(
            "Appendix (viii), position 6",
            "|s_8^4⟩_B",
            INV_2SQRT3.neg(),
            [c(1, 0, 2), c(2, 2, 0)],
            "printed label s_8^4 at the sixth position"
        ),
        state!(
            "Appendix (viii), position 7",
            "|s_8^5⟩_B",
            INV_2SQRT3,
            [c(1, 2, 1), c(1, 1, 2)],
            "printed label s_8^5 at the seventh position; no entry is labelled s_8^6"
        ),
        state!(
            "Appendix (viii), position 8",
            "|s_8^7⟩_B",
            INV_2SQRT3,
            [c(1, 2, 1), c(-1, 1, 2)]
        ),
        state!(
            "Appendix (viii), position 9",
            "|s_8^8⟩_B",
            SIXTH,
            [c(4, 0, 0), c(1, 1, 1)]
        ),
    ],
];

/// Outcome index carried by each printed channel-IX state label, by position.
pub static CHANNEL_IX_STATE_LABEL_KEYS: [usize; 9] = [0, 1, 2, 3, 8, 4, 5, 7, 8];

/// Measurement gates `[channel][position]`.
pub static GATES: [[GateText; 9]; 9] = [
    [
        gate!("Eq. (11a)", "Λ_0^0", THIRD, [o(1, 0, 0), o(1, 1, 1), o(1, 2, 2)]),
        gate!("Eq. (11b)", "Λ_0^1", INV_SQRT6, [o(1, 0, 1), o(1, 1, 0)]),
        gate!("Eq. (11c)", "Λ_0^2", INV_SQRT6, [o(1, 0, 1), o(-1, 1, 0)]),
        gate!("Eq. (11d)", "Λ_0^3", INV_SQRT6.neg(), [o(1, 1, 1), o(1, 2, 2)]),
        gate!("Eq. (11e)", "Λ_0^4", INV_SQRT6, [o(1, 0, 2), o(1, 2, 0)]),
        gate!("Eq. (11f)", "Λ_0^5", INV_SQRT6, [o(1, 0, 2), o(-1, 2, 0)]),
        gate!(
            "Eq. (11g)",
            "λ_0^6",
            INV_SQRT6,
            [o(1, 2, 1)],
            "first summand printed as the ket product |1⟩_B|2⟩, which is not an operator element; omitted"
        ),
        gate!("Eq. (11h)", "Λ_0^7", INV_SQRT6, [o(1, 1, 2), o(-1, 2, 1)]),
        gate!(
            "Eq. (11i)",
            "Λ_0^8",
            INV_3SQRT2,
            [o(1, 1, 1), o(1, 2, 2), o(-2, 0, 0)],
            "printed −2(|0⟩_B⟨0|] with an unmatched parenthesis; read as −2|0⟩⟨0|"
        ),
    ],
    [
        gate!("Appendix (i), Λ̂_1^0", "Λ̂_1^0", INV_SQRT6, [o(1, 0, 1), o(1, 1, 0)], NO_BRACKETS),
        gate!("Appendix (i), Λ̂_1^1", "Λ̂_1^1", HALF, [o(1, 0, 0), o(1, 1, 1)], NO_BRACKETS),
        gate!("Appendix (i), Λ̂_1^2", "Λ̂_1^2", HALF, [o(-1, 0, 0), o(1, 1, 1)], NO_BRACKETS),
        gate!("Appendix (i), Λ̂_1^3", "Λ̂_1^3", NEG_HALF, [o(1, 0, 1)]),
        gate!("Appendix (i), Λ̂_1^4", "Λ̂_1^4", HALF, [o(1, 1, 2)]),
        gate!("Appendix (i), Λ̂_1^5", "Λ̂_1^5", HALF, [o(1, 1, 2)]),
        gate!("Appendix (i), Λ̂_1^6", "Λ̂_1^6", HALF, [o(1, 0, 2)]),
        gate!("Appendix (i), Λ̂_1^7", "Λ̂_1^7", HALF, [o(1, 0, 2)]),
        gate!(
            "Appendix (i), Λ̂_1^8",
            "Λ̂_1^8",
            INV_2SQRT3,
            [o(1, 0, 1), o(-2, 1, 0)],
            "closing bracket missing"
        ),
    ],
    [
        gate!("Appendix (ii), Λ_2^0", "Λ_2^0", INV_SQRT6, [o(1, 0, 1), o(-1, 1, 0)]),
        gate!("Appendix (ii), Λ_2^1", "Λ_2^1", HALF, [o(1, 0, 0), o(-1, 1, 1)], NO_BRACKETS),
        gate!("Appendix (ii), Λ_2^2", "Λ_2^2", HALF, [o(-1, 0, 0), o(-1, 1, 1)], NO_BRACKETS),
        gate!("Appendix (ii), Λ_2^3", "Λ_2^3", NEG_HALF, [o(1, 0, 1)]),
        gate!("Appendix (ii), Λ_2^4", "Λ_2^4", NEG_HALF, [o(1, 1, 2)]),
        gate!("Appendix (ii), Λ_2^5", "Λ_2^5", NEG_HALF, [o(1, 1, 2)]),
        gate!("Appendix (ii), Λ_2^6", "Λ_2^6", HALF, [o(1, 0, 2)]),
        gate!("Appendix (ii), Λ_2^7", "Λ_2^7", HALF, [o(1, 0, 2)]),
        gate!("Appendix (ii), Λ_2^8", "Λ_2^8", INV_2SQRT3, [o(2, 1, 0), o(1, 0, 1)]),
    ],
    [
        gate!("Appendix (iii), Λ_3^0", "Λ_3^0", INV_SQRT6, [o(-1, 1, 1), o(1, 2, 2)]),
        gate!("Appendix (iii), Λ_3^1", "Λ_3^1", NEG_HALF, [o(1, 1, 0)]),
        gate!("Appendix (iii), Λ_3^2", "Λ_3^2", HALF, [o(1, 1, 0)]),
        gate!("Appendix (iii), Λ_3^3", "Λ_3^3", HALF, [o(1, 1, 1), o(1, 2, 2)]),
        gate!("Appendix (iii), Λ_3^4", "Λ_3^4", HALF, [o(1, 2, 0)]),
        gate!("Appendix (iii), Λ_3^5", "Λ_3^5", NEG_HALF, [o(1, 2, 0)]),
        gate!("Appendix (iii), Λ_3^6", "Λ_3^6", HALF, [o(-1, 1, 2), o(1, 2, 1)]),
        gate!("Appendix (iii), Λ_3^7", "Λ_3^7", NEG_HALF, [o(1, 1, 2), o(1, 2, 1)]),
        gate!("Appendix (iii), Λ_3^8", "Λ_3^8", INV_2SQRT3, [o(-1, 1, 1), o(1, 2, 2)]),
    ],
    [
        gate!("Appendix (iv), Λ_4^0", "Λ_4^0", INV_SQRT6, [o(1, 0, 2), o(1, 2, 0)]),
        gate!("Appendix (iv), Λ_4^1", "Λ_4^1", HALF, [o(1, 2, 1)]),
        gate!("Appendix (iv), Λ_4^2", "Λ_4^2", HALF, [o(1, 2, 1)]),
        gate!("Appendix (iv), Λ_4^3", "Λ_4^3", HALF, [o(1, 0, 2)]),
        gate!("Appendix (iv), Λ_4^4", "Λ_4^4", HALF, [o(1, 2, 2), o(1, 0, 0)]),
        gate!("Appendix (iv), Λ_4^5", "Λ_4^5", HALF, [o(1, 2, 2), o(-1, 0, 0)]),
        gate!("Appendix (iv), Λ_4^6", "Λ_4^6", HALF, [o(1, 0, 1)]),
        gate!("Appendix (iv), Λ_4^7", "Λ_4^7", NEG_HALF, [o(1, 0, 1)]),
        gate!("Appendix (iv), Λ_4^8", "Λ_4^8", INV_2SQRT3, [o(1, 0, 2), o(-2, 2, 0)]),
    ],
    [
        gate!(
            "Appendix (v), Λ_5^0",
            "Λ_5^0",
            INV_SQRT6,
            [o(1, 0, 2), o(-1, 2, 0)],
            "opening and closing brackets typeset at different sizes"
        ),
        gate!("Appendix (v), Λ_5^1", "Λ_5^1", NEG_HALF, [o(1, 2, 1)]),
        gate!("Appendix (v), Λ_5^2", "Λ_5^2", NEG_HALF, [o(1, 2, 1)]),
        gate!(
            "Appendix (v), Λ_5^3",
            "Λ_5^3",
            HALF,
            [o(1, 0, 2)],
            "opening bracket never closed; read as 1/2|0⟩⟨2|"
        ),
        gate!("Appendix (v), Λ_5^4", "Λ_5^4", HALF, [o(1, 0, 0), o(-1, 2, 2)]),
        gate!("Appendix (v), Λ_5^5", "Λ_5^5", NEG_HALF, [o(1, 0, 0), o(1, 2, 2)]),
        gate!("Appendix (v), Λ_5^6", "Λ_5^6", HALF, [o(1, 0, 1)]),
        gate!("Appendix (v), Λ_5^7", "Λ_5^7", NEG_HALF, [o(1, 0, 1)]),
        gate!("Appendix (v), Λ_5^8", "Λ_5^8", INV_2SQRT3, [o(1, 0, 2), o(2, 2, 0)]),
    ],
    [
        gate!("Appendix (vi), Λ_6^0", "Λ_6^0", INV_SQRT6, [o(1, 0, 1), o(1, 1, 2)]),
        gate!("Appendix (vi), Λ_6^1", "Λ_6^1", HALF, [o(1, 0, 0)]),
        gate!("Appendix (vi), Λ_6^2", "Λ_6^2", NEG_HALF, [o(1, 0, 0)]),
        gate!("Appendix (vi), Λ_6^3", "Λ_6^3", HALF, [o(-1, 0, 1), o(1, 1, 2)]),
        gate!(
            "Appendix (vi), Λ_6^4",
            "Λ_6^4",
            HALF,
            [o(-1, 0, 1), o(1, 1, 2)],
            "printed identical to Λ_6^3"
        ),
        gate!("Appendix (vi), Λ_6^5", "Λ_6^5", NEG_HALF, [o(1, 1, 0)]),
        gate!("Appendix (vi), Λ_6^6", "Λ_6^6", HALF, [o(1, 0, 2), o(1, 1, 1)]),
        gate!("Appendix (vi), Λ_6^7", "Λ_6^7", HALF, [o(1, 0, 2), o(-1, 1, 1)]),
        gate!("Appendix (vi), Λ_6^8", "Λ_6^8", INV_2SQRT3, [o(1, 0, 1), o(1, 1, 2)]),
    ],
    [
        gate!("Appendix (vii), Λ_7^0", "Λ_7^0", INV_SQRT6, [o(-1, 0, 1), o(1, 1, 2)]),
        gate!("Appendix (vii), Λ_7^1", "Λ_7^1", NEG_HALF, [o(1, 0, 0)]),
        gate!("Appendix (vii), Λ_7^2", "Λ_7^2", HALF, [o(1, 0, 0)]),
        gate!("Appendix (vii), Λ_7^3", "Λ_7^3", HALF, [o(1, 0, 1), o(1, 1, 2)]),
        gate!("Appendix (vii), Λ_7^4", "Λ_7^4", HALF, [o(1, 1, 0)]),
        gate!("Appendix (vii), Λ_7^5", "Λ_7^5", NEG_HALF, [o(1, 1, 0)]),
        gate!("Appendix (vii), Λ_7^6", "Λ_7^6", HALF, [o(1, 1, 1), o(-1, 0, 2)]),
        gate!("Appendix (vii), Λ_7^7", "Λ_7^7", NEG_HALF, [o(1, 1, 1), o(1, 0, 2)]),
        gate!("Appendix (vii), Λ_7^8", "Λ_7^8", INV_2SQRT3, [o(-1, 0, 1), o(1, 1, 2)]),
    ],
    [
        gate!(
            "Appendix (viii), position 1",
            "Λ_0^8",
            INV_3SQRT2,
            [o(-2, 0, 0), o(1, 1, 1)],
            "channel and outcome indices printed swapped"
        ),
        gate!(
            "Appendix (viii), position 2",
            "Λ_1^8",
            INV_2SQRT3,
            [o(-2, 0, 1), o(1, 1, 0)],
            "channel and outcome indices printed swapped"
        ),
        gate!(
            "Appendix (viii), position 3",
            "Λ_2^8",
            INV_2SQRT3.neg(),
            [o(2, 0, 1), o(1, 1, 0)],
            "channel and outcome indices printed swapped"
        ),
        gate!(
            "Appendix (viii), position 4",
            "Λ_3^8",
            INV_2SQRT3.neg(),
            [o(1, 1, 1)],
            "channel and outcome indices printed swapped"
        ),
        gate!(
            "Appendix (viii), position 5",
            "Λ_4^8",
            INV_2SQRT3.neg(),
            [o(-2, 0, 2), o(1, 2, 0)],
            "channel and outcome indices printed swapped"
        ),
        gate!(
            "Appendix (viii), position 6",
            "Λ_5^8",
            INV_2SQRT3.neg(),
            [o(2, 0, 2), o(1, 2, 0)],
            "channel and outcome indices printed swapped"
        ),
        gate!(
            "Appendix (viii), position 7",
            "Λ_6^8",
            INV_2SQRT3,
            [o(1, 1, 2), o(1, 2, 1)],
            "channel and outcome indices printed swapped"
        ),
        gate!(
            "Appendix (viii), position 8",
            "Λ_7^8",
            INV_2SQRT3,
            [o(1, 1, 2), o(-1, 2, 1)],
            "channel and outcome indices printed swapped"
        ),
        gate!("Appendix (viii), position 9", "Λ_8^8", SIXTH, [o(4, 0, 0), o(1, 1, 1)]),
    ],
];

/// Label anomalies printed outside the state and gate lists themselves. Anomalies in
/// the printed state and gate labels are found by comparing them with the canonical
/// labels.
pub struct LabelText {
    pub location: &'static str,
    pub channel: usize,
    pub outcome: usize,
    pub printed_label: &'static str,
    pub canonical_label: &'static str,
    pub notes: &'static str,
}

pub static EXTRA_LABEL_ANOMALIES: &[LabelText] = &[
    LabelText {
        location: "Table 1, row |Ψ_3⟩_{A1A2}",
        channel: 0,
        outcome: 3,
        printed_label: "|s^3_0⟩_0",
        canonical_label: "|s_0^3⟩_B",
        notes: "site subscript printed as 0 instead of B",
    },
    LabelText {
        location: "Eq. (9)",
        channel: 0,
        outcome: 5,
        printed_label: "|Ψ_5^0⟩_{A1A2}",
        canonical_label: "|Ψ_5⟩_{A1A2}",
        notes: "stray superscript 0 on the measured basis state",
    },
    LabelText {
        location: "Eq. (9)",
        channel: 0,
        outcome: 7,
        printed_label: "|Ψ_7⟩_{TA}",
        canonical_label: "|Ψ_7⟩_{A1A2}",
        notes: "site subscript TA on the measured basis state",
    },
    LabelText {
        location: "Appendix (iii), |s_3^7⟩_B",
        channel: 3,
        outcome: 7,
        printed_label: "|1_B⟩_B",
        canonical_label: "|1⟩_B",
        notes: "doubled site subscript on a basis ket",
    },
];
