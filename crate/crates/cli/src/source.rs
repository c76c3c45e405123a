//! Resolves a graph source: a builtin generator spec or an edge-list file.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use graph_hypergroup::generators::{
    cayley, complete, cycle, figure2_graph, hypercube, path, petersen, platonic_by_name, CayleySpec,
};
use graph_hypergroup::Graph;

pub const BUILTINS: &str = "petersen, fig2, cycle N, complete N, path N, hypercube D, platonic NAME, cayley zN s1,s2,...";

/// `cycle4` and `cycle 4` both name the 4-cycle.
fn split_family(word: &str) -> (&str, Option<&str>) {
    if matches!(word, "fig2" | "figure2") {
        return (word, None);
    }
    match word.find(|c: char| c.is_ascii_digit()) {
        Some(0) | None => (word, None),
        Some(i) => (&word[..i], Some(&word[i..])),
    }
}

fn number(family: &str, arg: Option<&str>) -> Result<usize> {
    let arg = arg.ok_or_else(|| anyhow!("{family} needs a size argument"))?;
    arg.parse().with_context(|| format!("{family}: '{arg}' is not a non-negative integer"))
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<usize>().with_context(|| format!("bad list entry '{t}'")))
        .collect()
}

/// Builtin graph for `words`, or `None` if the first word names no family.
pub fn builtin(words: &[String]) -> Result<Option<Graph>> {
    let Some(first) = words.first() else {
        bail!("missing graph source");
    };
    let lower = first.to_ascii_lowercase();
    let (family, inline) = split_family(&lower);
    let rest = &words[1..];
    let arg = inline.or(rest.first().map(String::as_str));
    let expected_rest = usize::from(inline.is_none() && !rest.is_empty());
    let graph = match family {
        "petersen" => petersen(),
        "fig2" | "figure2" => figure2_graph().graph().clone(),
        "cycle" => cycle(number(family, arg)?)?,
        "complete" => complete(number(family, arg)?)?,
        "path" => path(number(family, arg)?)?,
        "hypercube" => hypercube(number(family, arg)?)?,
        "platonic" => platonic_by_name(arg.ok_or_else(|| anyhow!("platonic needs a solid name"))?)?,
        "cayley" => {
            let group = arg.ok_or_else(|| anyhow!("cayley needs a group such as z6"))?;
            let order = group
                .strip_prefix('z')
                .and_then(|n| n.parse::<usize>().ok())
                .ok_or_else(|| anyhow!("unsupported group '{group}', expected zN"))?;
            let gens = words.get(1 + expected_rest).ok_or_else(|| anyhow!("cayley needs a generator list"))?;
            let graph = cayley(&CayleySpec::cyclic(order, &parse_list(gens)?))?;
            return check_arity(words, 2 + expected_rest).map(|_| Some(graph));
        }
        _ => return Ok(None),
    };
    let takes_arg = !matches!(family, "petersen" | "fig2" | "figure2");
    check_arity(words, 1 + if takes_arg { expected_rest } else { 0 })?;
    Ok(Some(graph))
}

fn check_arity(words: &[String], used: usize) -> Result<()> {
    if words.len() > used {
        bail!("unexpected extra arguments: {}", words[used..].join(" "));
    }
    Ok(())
}

/// Builtins first, then a file path.
pub fn resolve(words: &[String]) -> Result<Graph> {
    if let Some(g) = builtin(words)? {
        return Ok(g);
    }
    if words.len() != 1 {
        bail!("'{}' is neither a builtin graph ({BUILTINS}) nor a single file path", words.join(" "));
    }
    let path = Path::new(&words[0]);
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read graph file {}", path.display()))?;
    Graph::parse_edge_list(&text).with_context(|| format!("cannot parse {}", path.display()))
}

pub fn parse_sequence(s: &str) -> Result<Vec<usize>> {
    let seq = parse_list(s)?;
    if seq.is_empty() {
        bail!("jump sequence is empty");
    }
    Ok(seq)
}
