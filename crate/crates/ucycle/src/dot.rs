//! Graphviz DOT export.

use std::fmt::Write as _;

use ucycle_core::TransitionGraph;

/// Writes `g` as a `digraph`, one `"tail" -> "head" [label="..."];` line
/// per edge in edge order. Vertices are declared first so that isolated
/// ones are kept.
pub fn to_dot<V, E>(
    name: &str,
    g: &TransitionGraph<V, E>,
    vertex: impl Fn(&V) -> String,
    label: impl Fn(&E) -> String,
) -> String {
    let mut out = format!("digraph {} {{\n", quote(name));
    for v in g.vertices() {
        writeln!(out, "  {};", quote(&vertex(v))).expect("String");
    }
    for e in g.edges() {
        writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(&vertex(g.vertex(e.tail))),
            quote(&vertex(g.vertex(e.head))),
            quote(&label(&e.label))
        )
        .expect("String");
    }
    out.push_str("}\n");
    out
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_graph() {
        let mut g: TransitionGraph<&str, &str> = TransitionGraph::new();
        let v = g.add_vertex("1");
        g.add_edge(v, v, "a\"b");
        let dot = to_dot("P", &g, |v| v.to_string(), |e| e.to_string());
        assert_eq!(dot, "digraph \"P\" {\n  \"1\";\n  \"1\" -> \"1\" [label=\"a\\\"b\"];\n}\n");
    }
}
