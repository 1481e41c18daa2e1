//! Branch-cycle tuples of covers `P¹ → P¹`: Nielsen classes, braid orbits,
//! monodromy groups, and an audit of tabulated orbit counts.

mod braid;
mod group;
mod nielsen;
mod perm;
mod table;

pub use braid::{braid_move, braid_move_inv, braid_orbit_closure, braid_orbits, BraidOrbit};
pub use group::{group_info, is_transitive, GroupInfo};
pub use nielsen::{
    group_order, nielsen_enumerate, NielsenClass, PermTuple, MAX_ENUMERATION_DEGREE,
};
pub use perm::{all_perms, conjugacy_class, parse_cycle_types, Perm};
pub use table::{audit_row, audit_table, Discrepancy, RowAudit, TableAudit, TableRow, TABLE};
