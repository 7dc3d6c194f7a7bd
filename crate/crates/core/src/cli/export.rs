//! `enum`: materialized MB structures as edge lists or DOT.

use clap::ValueEnum;

use super::CliError;
use crate::enumeration::{enumerate_mb, Cap, MbStructureKey};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EnumFormat {
    Edges,
    Dot,
}

fn node_name(key: &MbStructureKey, v: usize) -> String {
    format!("{}{v}", key.roles().role(v).letter())
}

/// One `digraph` block; nodes are named by role letter and index (`T0`, `P1`).
pub fn dot_block(key: &MbStructureKey, index: usize) -> String {
    let roles = key.roles();
    let mut out = format!("digraph mb_{index} {{\n");
    for (v, role) in roles.iter() {
        out.push_str(&format!("  {}{v};\n", role.letter()));
    }
    for &(s, d) in key.edges() {
        out.push_str(&format!(
            "  {} -> {};\n",
            node_name(key, s),
            node_name(key, d)
        ));
    }
    out.push_str("}\n");
    out
}

pub fn cmd_enum(n: usize, target: usize, format: EnumFormat, cap: Cap) -> Result<String, CliError> {
    let keys = enumerate_mb(n, target, cap)?;
    let text = match format {
        EnumFormat::Edges => keys.map(|k| k.edge_list() + "\n").collect(),
        EnumFormat::Dot => keys
            .enumerate()
            .map(|(i, k)| dot_block(&k, i))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok(text)
}
