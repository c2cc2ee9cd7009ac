//! The JSON algebra file.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{CurledTable, CurledType, Element, Param};
use crate::field::{Field, FieldDescriptor, FieldError, Fp, Rational};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed algebra file: {0}")]
    Malformed(String),
    #[error("type entries must be 0 or 1, got {0:?}")]
    TypeBits([u8; 3]),
    #[error(transparent)]
    Field(#[from] FieldError),
}

impl FileError {
    /// 2 for unreadable or malformed input, 3 when the field or a literal is
    /// invalid.
    pub fn exit_code(&self) -> i32 {
        match self {
            FileError::Field(_) => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldSpec {
    Prime { p: u64 },
    Rational,
}

impl FieldSpec {
    pub fn descriptor(&self) -> Result<FieldDescriptor, FieldError> {
        match self {
            FieldSpec::Prime { p } => FieldDescriptor::prime(*p),
            FieldSpec::Rational => Ok(FieldDescriptor::Rational),
        }
    }
}

/// A scalar as written: a JSON integer or a string such as `"-3/4"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Literal {
    Int(i64),
    Text(String),
}

impl Literal {
    fn of<K: Field>(x: &K) -> Literal {
        let s = x.to_string();
        s.parse().map(Literal::Int).unwrap_or(Literal::Text(s))
    }

    fn value<K: Field>(&self, ctx: &K::Context) -> Result<K, FieldError> {
        match self {
            Literal::Int(n) => Ok(K::from_integer(*n, ctx)),
            Literal::Text(s) => K::parse_literal(s, ctx),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Products {
    pub ef: [Literal; 3],
    pub eg: [Literal; 3],
    pub fe: [Literal; 3],
    pub fg: [Literal; 3],
    pub ge: [Literal; 3],
    pub gf: [Literal; 3],
}

impl Products {
    fn in_param_order(&self) -> [&[Literal; 3]; 6] {
        [&self.ef, &self.eg, &self.fe, &self.fg, &self.ge, &self.gf]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    #[serde(rename = "type")]
    pub ty: [u8; 3],
    pub products: Products,
}

/// A validated table over whichever field the file names.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum LoadedTable {
    Prime(CurledTable<Fp>),
    Rational(CurledTable<Rational>),
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self, FileError> {
        serde_json::from_str(text).map_err(|e| FileError::Malformed(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self, FileError> {
        let text = std::fs::read_to_string(path).map_err(|e| FileError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_table<K: Field>(table: &CurledTable<K>) -> Self {
        let field = match table.descriptor() {
            FieldDescriptor::Prime(m) => FieldSpec::Prime {
                p: u64::from(m.get()),
            },
            FieldDescriptor::Rational => FieldSpec::Rational,
        };
        let lit = |p: Param| table.param(p).coords().each_ref().map(Literal::of);
        AlgebraFile {
            field,
            ty: table.ty().bits(),
            products: Products {
                ef: lit(Param::A),
                eg: lit(Param::B),
                fe: lit(Param::C),
                fg: lit(Param::D),
                ge: lit(Param::E),
                gf: lit(Param::F),
            },
        }
    }

    pub fn curled_type(&self) -> Result<CurledType, FileError> {
        let [i, j, k] = self.ty;
        CurledType::new(i, j, k).map_err(|_| FileError::TypeBits(self.ty))
    }

    fn table<K: Field>(&self, ctx: &K::Context) -> Result<CurledTable<K>, FileError> {
        let ty = self.curled_type()?;
        let mut params = Vec::with_capacity(6);
        for lits in self.products.in_param_order() {
            let [x, y, z] = lits;
            params.push(Element::new(x.value(ctx)?, y.value(ctx)?, z.value(ctx)?)?);
        }
        let params: [Element<K>; 6] = params.try_into().expect("six products");
        Ok(CurledTable::new(ty, params)?)
    }

    /// Validates the type bits, the field and every literal.
    pub fn load(&self) -> Result<LoadedTable, FileError> {
        self.curled_type()?;
        match self.field.descriptor()? {
            FieldDescriptor::Prime(m) => Ok(LoadedTable::Prime(self.table::<Fp>(&m)?)),
            FieldDescriptor::Rational => Ok(LoadedTable::Rational(self.table::<Rational>(&())?)),
        }
    }
}

/// Convenience for tests and callers building files by hand.
pub fn prime_table(file: &AlgebraFile) -> Result<CurledTable<Fp>, FileError> {
    match file.load()? {
        LoadedTable::Prime(t) => Ok(t),
        LoadedTable::Rational(_) => Err(FileError::Field(FieldError::UnsupportedField(
            FieldDescriptor::Rational,
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Basis;
    use crate::field::Modulus;

    const ZERO_GF2: &str = r#"{
        "field": {"kind": "prime", "p": 2},
        "type": [0, 0, 0],
        "products": {"ef": [0,0,0], "eg": [0,0,0], "fe": [0,0,0],
                     "fg": [0,0,0], "ge": [0,0,0], "gf": [0,0,0]}
    }"#;

    #[test]
    fn loads_zero_table() {
        let f = AlgebraFile::from_json(ZERO_GF2).unwrap();
        let t = prime_table(&f).unwrap();
        assert_eq!(t, CurledTable::zero(t.ty(), &Modulus::new(2).unwrap()));
    }

    #[test]
    fn rational_literals() {
        let text = ZERO_GF2
            .replace(r#"{"kind": "prime", "p": 2}"#, r#"{"kind": "rational"}"#)
            .replace(r#""ef": [0,0,0]"#, r#""ef": ["1/2", -3, "4"]"#);
        let f = AlgebraFile::from_json(&text).unwrap();
        let LoadedTable::Rational(t) = f.load().unwrap() else {
            panic!("expected a rational table")
        };
        assert_eq!(t.param(Param::A).to_string(), "(1/2, -3, 4)");
        let back = AlgebraFile::from_table(&t);
        assert_eq!(
            back.products.ef,
            [
                Literal::Text("1/2".into()),
                Literal::Int(-3),
                Literal::Int(4)
            ]
        );
    }

    #[test]
    fn error_classes() {
        let bad_type = ZERO_GF2.replace("[0, 0, 0]", "[2, 0, 0]");
        let e = AlgebraFile::from_json(&bad_type)
            .unwrap()
            .load()
            .unwrap_err();
        assert_eq!(e.exit_code(), 2);

        let short = ZERO_GF2.replace(r#""ef": [0,0,0]"#, r#""ef": [0,0]"#);
        assert_eq!(AlgebraFile::from_json(&short).unwrap_err().exit_code(), 2);

        let not_prime = ZERO_GF2.replace(r#""p": 2"#, r#""p": 4"#);
        let e = AlgebraFile::from_json(&not_prime)
            .unwrap()
            .load()
            .unwrap_err();
        assert_eq!(e.exit_code(), 3);

        let fraction = ZERO_GF2.replace(r#""ef": [0,0,0]"#, r#""ef": ["1/2",0,0]"#);
        let e = AlgebraFile::from_json(&fraction)
            .unwrap()
            .load()
            .unwrap_err();
        assert_eq!(e.exit_code(), 3);
    }

    #[test]
    fn from_table_round_trip() {
        let m = Modulus::new(5).unwrap();
        let t = CurledTable::<Fp>::zero(CurledType::new(1, 0, 1).unwrap(), &m)
            .with(Param::D, Element::basis(Basis::F, &m).scale(&Fp::new(4, m)))
            .unwrap();
        let f = AlgebraFile::from_table(&t);
        let again = AlgebraFile::from_json(&f.to_json()).unwrap();
        assert_eq!(again, f);
        assert_eq!(prime_table(&again).unwrap(), t);
    }
}
