//! Exact closed forms and the determinant identities they rest on.

pub mod indices;
pub mod lemmas;
pub mod report;

pub use indices::{
    cofactor_sum_n, cofactor_sum_surd, gutman, kemeny, kf_star, ratio, schultz, spanning_trees,
    surd_pair, vieta_a, vieta_s, SurdPair,
};
pub use lemmas::{
    det_n, det_r, det_r_marked, det_r_nm, det_s, det_t, det_w1, det_w2, det_w3, n_matrix,
    r_marked_matrix, r_matrix, r_nm_matrix, s_matrix, t_matrix, w1_matrix, w2_matrix, w3_matrix,
};
pub use report::{
    ratio_diagnostics, ratios_increase_below_three, table_csv, table_rows, ExactValue,
    IndexReport, IndexReportJson, RatioRow, TableRow, DEFAULT_TABLE_NS,
};
