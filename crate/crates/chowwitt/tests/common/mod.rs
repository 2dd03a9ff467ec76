#![allow(dead_code)]

use chowwitt::graded::{Bidegree, Twist};
use chowwitt::linalg::GroupType;
use chowwitt::scalar::FieldModel;
use chowwitt::spaces::{build_chow_witt, build_i_cohomology, parse_space, SpaceTheories};
use num_bigint::BigInt;

pub fn fields() -> Vec<FieldModel> {
    ["C", "R", "F3", "F5", "F7"].iter().map(|c| FieldModel::parse(c).unwrap()).collect()
}

pub fn chw(space: &str, field: &FieldModel, bound: u32) -> SpaceTheories {
    build_chow_witt(&parse_space(space).unwrap(), field, bound).unwrap()
}

pub fn hi(space: &str, field: &FieldModel, bound: u32) -> SpaceTheories {
    build_i_cohomology(&parse_space(space).unwrap(), field, bound).unwrap()
}

pub fn twist(bits: &str) -> Twist {
    Twist::parse_bits(bits).unwrap()
}

/// Group type and reduction index at a public bidegree.
pub fn at(st: &SpaceTheories, i: u32, bits: &str) -> (GroupType, Option<BigInt>) {
    let th = &st.theory;
    let p = th.piece(&Bidegree::new(i, th.lift_twist(&twist(bits)).unwrap())).unwrap();
    (p.group.group_type(), p.rho_image_index())
}

pub fn ty(text: &str) -> GroupType {
    // "Z^2 + Z/2 + Z/8", "0"
    let mut orders: Vec<BigInt> = Vec::new();
    for part in text.split('+').map(str::trim) {
        if part == "0" {
            continue;
        } else if let Some(n) = part.strip_prefix("Z/") {
            orders.push(n.parse::<i64>().unwrap().into());
        } else if let Some(k) = part.strip_prefix("Z^") {
            orders.extend(std::iter::repeat_n(BigInt::from(0), k.parse().unwrap()));
        } else {
            assert_eq!(part, "Z");
            orders.push(0.into());
        }
    }
    GroupType::from_orders(&orders)
}
