//! Braiding: a braid word whose closure realizes given Gauss data.
//!
//! Sites are placed around a circle in the order crossings then bars, each
//! kind by id. An arc whose target does not come strictly after its source
//! passes the base angle, so it is a strand at the top of the braid. The
//! sweep routes input strands with `v` letters only.

use alloc::string::String;
use alloc::vec::Vec;

use crate::diagram::{validate, GaussData, SiteKind};
use crate::word::{BraidWord, Generator, MAX_DEGREE};
use crate::Error;

fn swap(live: &mut [usize], out: &mut Vec<Generator>, p: usize) {
    live.swap(p, p + 1);
    out.push(Generator::v(p as u8 + 1));
}

pub fn braid_from_gauss_data(gd: &GaussData) -> Result<BraidWord, Error> {
    let report = validate(gd);
    if let Some(first) = report.violations.first() {
        return Err(Error::InvalidGaussData(first.clone()));
    }
    let kinds = gd.sites();
    let mut order: Vec<_> = kinds.iter().collect();
    order.sort_by_key(|(id, k)| (matches!(k, SiteKind::Bar), (*id).clone()));
    let rank = |id: &crate::diagram::SiteId| order.iter().position(|(x, _)| *x == id).unwrap();

    let wrapping: Vec<usize> = (0..gd.arcs.len())
        .filter(|&a| rank(&gd.arcs[a].1.site) <= rank(&gd.arcs[a].0.site))
        .collect();
    let n = wrapping.len() + gd.free_loops;
    if n == 0 {
        return Err(Error::InvalidGaussData(String::from("no strands to braid")));
    }
    if n > MAX_DEGREE {
        return Err(Error::BadDegree(n));
    }
    let arc_into = |site: &crate::diagram::SiteId, slot: u8| {
        gd.arcs.iter().position(|(_, b)| b.site == *site && b.slot == slot).unwrap()
    };
    let arc_out_of = |site: &crate::diagram::SiteId, slot: u8| {
        gd.arcs.iter().position(|(a, _)| a.site == *site && a.slot == slot).unwrap()
    };

    let mut live = wrapping.clone();
    let mut out = Vec::new();
    for (id, kind) in &order {
        let pos = |live: &[usize], a: usize| live.iter().position(|&x| x == a).unwrap();
        match kind {
            SiteKind::Crossing(sign) => {
                let (a1, a2) = (arc_into(id, 1), arc_into(id, 2));
                loop {
                    let (p1, p2) = (pos(&live, a1), pos(&live, a2));
                    if p1 + 1 == p2 {
                        break;
                    }
                    if p1 < p2 {
                        swap(&mut live, &mut out, p1);
                    } else {
                        swap(&mut live, &mut out, p1 - 1);
                    }
                }
                let p = pos(&live, a1);
                out.push(if *sign > 0 { Generator::sigma(p as u8 + 1) } else { Generator::sigma_inv(p as u8 + 1) });
                live[p] = arc_out_of(id, 3);
                live[p + 1] = arc_out_of(id, 4);
            }
            SiteKind::Bar => {
                let p = pos(&live, arc_into(id, 1));
                out.push(Generator::gamma(p as u8 + 1));
                live[p] = arc_out_of(id, 2);
            }
        }
    }
    // back to the top order
    for (target, &a) in wrapping.iter().enumerate() {
        let mut p = live.iter().position(|&x| x == a).unwrap();
        while p > target {
            swap(&mut live, &mut out, p - 1);
            p -= 1;
        }
    }
    BraidWord::new(n, out)
}
