//! Small worked tables: every member of a set at one norm with a nonzero
//! weight, and the column total.

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{q_membership, r_membership, SetId, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    /// Frequency notation, e.g. `(1^3,2,3)`.
    pub partition: String,
    /// The `n` attached to members of R and Q.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub weight: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableColumn {
    pub set: String,
    pub weight: String,
    pub norm: u32,
    pub rows: Vec<TableRow>,
    pub total: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub id: u32,
    pub title: String,
    pub columns: Vec<TableColumn>,
}

pub const TABLE_IDS: [u32; 4] = [2, 3, 4, 7];

fn column(set: SetId, weight: Weight, norm: u32) -> Result<TableColumn> {
    let mut rows = Vec::new();
    let mut total = 0i64;
    for p in set.members(norm) {
        let w = weight.eval(&p)?;
        if w.is_zero() {
            continue;
        }
        let w = w
            .to_i64()
            .ok_or_else(|| Error::Domain("table weight out of range".into()))?;
        let n = match set {
            SetId::Rset => r_membership(&p),
            SetId::Qset => q_membership(&p),
            _ => None,
        };
        total += w;
        rows.push(TableRow {
            partition: p.to_string(),
            n,
            weight: w,
        });
    }
    Ok(TableColumn {
        set: set.name().into(),
        weight: weight.name().into(),
        norm,
        rows,
        total,
    })
}

/// Builds table `id` (one of [`TABLE_IDS`]).
pub fn table(id: u32) -> Result<Table> {
    let (title, columns) = match id {
        2 => (
            "t-weight on U* at N = 10",
            vec![column(SetId::Ustar, Weight::T, 10)?],
        ),
        3 => (
            "tau-weight on U at N = 8",
            vec![column(SetId::U, Weight::Tau, 8)?],
        ),
        4 => (
            "omega*-weight on U at N = 4 and N = 5",
            vec![
                column(SetId::U, Weight::OmegaStar, 4)?,
                column(SetId::U, Weight::OmegaStar, 5)?,
            ],
        ),
        7 => (
            "2^nu_d on C~, mu on R and eta on Q at N = 7",
            vec![
                column(SetId::Ctilde, Weight::TwoPowNuD, 7)?,
                column(SetId::Rset, Weight::Mu, 7)?,
                column(SetId::Qset, Weight::Eta, 7)?,
            ],
        ),
        other => return Err(Error::UnknownTable(other.to_string())),
    };
    Ok(Table {
        id,
        title: title.into(),
        columns,
    })
}
