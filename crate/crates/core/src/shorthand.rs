//! Pattern names accepted on the command line.
//!
//! `K5` (clique), `K_{2,3}` and `K_{1,2,2}` (complete multipartite),
//! `K^{3}_{2,5}` (`r` parts: one of size `t`, `r - 1` of size `s`), `C5`
//! (cycle), `P4` (path on four vertices). Anything else is decoded as graph6.

use crate::error::{Error, Result};
use crate::graph::{complete_multipartite, graph6_decode, kst_graph, Graph, MAX_VERTICES};

fn number(text: &str, whole: &str) -> Result<usize> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) || text.len() > 3 {
        return Err(Error::Parse(format!("bad number {text:?} in pattern {whole:?}")));
    }
    let v: usize = text.parse().map_err(|_| Error::Parse(format!("bad number in {whole:?}")))?;
    if v > MAX_VERTICES {
        return Err(Error::TooManyVertices { n: v, max: MAX_VERTICES });
    }
    Ok(v)
}

fn braced<'a>(text: &'a str, whole: &str) -> Result<(&'a str, &'a str)> {
    let inner = text.strip_prefix('{').ok_or_else(|| Error::Parse(format!("expected '{{' in {whole:?}")))?;
    let close = inner.find('}').ok_or_else(|| Error::Parse(format!("unclosed '{{' in {whole:?}")))?;
    Ok((&inner[..close], &inner[close + 1..]))
}

fn part_list(text: &str, whole: &str) -> Result<Vec<usize>> {
    let parts = text.split(',').map(|p| number(p.trim(), whole)).collect::<Result<Vec<_>>>()?;
    if parts.iter().sum::<usize>() > MAX_VERTICES {
        return Err(Error::TooManyVertices { n: parts.iter().sum(), max: MAX_VERTICES });
    }
    Ok(parts)
}

/// Parse a pattern name or a graph6 string.
pub fn parse_pattern(text: &str) -> Result<Graph> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty pattern".into()));
    }
    let bytes = text.as_bytes();
    let digits_after = |k: usize| bytes.len() > k && bytes[k..].iter().all(u8::is_ascii_digit);
    match bytes[0] {
        b'K' if digits_after(1) => Graph::complete(number(&text[1..], text)?),
        b'C' if digits_after(1) => Graph::cycle(number(&text[1..], text)?),
        b'P' if digits_after(1) => Graph::path(number(&text[1..], text)?),
        b'K' if text.starts_with("K_{") => {
            let (inner, rest) = braced(&text[2..], text)?;
            if !rest.is_empty() {
                return Err(Error::Parse(format!("trailing input in {text:?}")));
            }
            let parts = part_list(inner, text)?;
            if parts.contains(&0) {
                return Err(Error::Parse(format!("empty part in {text:?}")));
            }
            complete_multipartite(&parts)
        }
        b'K' if text.starts_with("K^{") => {
            let (r, rest) = braced(&text[2..], text)?;
            let r = number(r.trim(), text)?;
            let rest = rest.strip_prefix('_').ok_or_else(|| Error::Parse(format!("expected '_' in {text:?}")))?;
            let (st, tail) = braced(rest, text)?;
            if !tail.is_empty() {
                return Err(Error::Parse(format!("trailing input in {text:?}")));
            }
            let st = part_list(st, text)?;
            let &[s, t] = st.as_slice() else {
                return Err(Error::Parse(format!("expected two sizes s,t in {text:?}")));
            };
            if r == 0 || s == 0 || s > t {
                return Err(Error::Parse(format!("need r >= 1 and 1 <= s <= t in {text:?}")));
            }
            if (r - 1) * s + t > MAX_VERTICES {
                return Err(Error::TooManyVertices { n: (r - 1) * s + t, max: MAX_VERTICES });
            }
            kst_graph(r, s, t)
        }
        _ => graph6_decode(text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_isomorphic, turan_graph};

    #[test]
    fn named_patterns() {
        assert_eq!(parse_pattern("K3").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(parse_pattern("C5").unwrap(), Graph::cycle(5).unwrap());
        let p4 = parse_pattern("P4").unwrap();
        assert_eq!((p4.n(), p4.edge_count()), (4, 3));
        assert!(is_isomorphic(&parse_pattern("K_{2,2}").unwrap(), &Graph::cycle(4).unwrap()));
        assert!(is_isomorphic(&parse_pattern("K_{2, 2, 2}").unwrap(), &turan_graph(6, 3).unwrap()));
        let k = parse_pattern("K^{3}_{2,5}").unwrap();
        assert!(is_isomorphic(&k, &complete_multipartite(&[2, 2, 5]).unwrap()));
    }

    #[test]
    fn graph6_fallback() {
        assert_eq!(parse_pattern("Bw").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(parse_pattern(" Bw\n").unwrap(), Graph::complete(3).unwrap());
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "K_{2,}", "K_{2,2", "K_{2,2}x", "K_{0,3}", "K^{3}_{5,2}", "K^{3}_{2}", "K^{0}_{1,1}", "K^{3}{2,5}", "C2", "K99999", "K65", "K_{40,40}", "K^{30}_{3,3}"] {
            assert!(parse_pattern(bad).is_err(), "{bad:?}");
        }
    }
}
