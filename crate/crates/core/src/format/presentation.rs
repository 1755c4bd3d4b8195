use std::collections::HashMap;

use super::{parse_group, write_group, Lines};
use crate::error::{Error, Result};
use crate::group::{bind_presentation, Letter, MarkedGroup, Presentation, Word};

fn parse_letter(n: usize, tok: &str, index: &HashMap<String, usize>) -> Result<Vec<Letter>> {
    if tok == "1" {
        return Ok(Vec::new());
    }
    let (name, exp) = match tok.split_once('^') {
        Some((name, e)) => {
            let e: i64 = e
                .parse()
                .map_err(|_| Error::parse(n, format!("bad exponent in `{tok}`")))?;
            (name, e)
        }
        None => (tok, 1),
    };
    let &g = index
        .get(name)
        .ok_or_else(|| Error::parse(n, format!("unknown generator `{name}`")))?;
    if exp == 0 {
        return Err(Error::parse(n, format!("zero exponent in `{tok}`")));
    }
    Ok(Word::power(g, exp).0)
}

/// Parses the presentation format: a `group` line, `gens`, any number of `rel` lines
/// and optional `map <gen> <element index>` lines. Without `map` lines a catalog group
/// binds generators by position to its default images.
pub fn parse_presentation(text: &str) -> Result<MarkedGroup> {
    let mut lines = Lines::new(text);
    let group = parse_group(&mut lines)?;
    let mut gens: Option<Vec<String>> = None;
    let mut rels: Vec<(usize, Vec<String>)> = Vec::new();
    let mut maps: Vec<(usize, String, String)> = Vec::new();
    while let Some((n, l)) = lines.next() {
        let mut toks = l.split_whitespace();
        match toks.next() {
            Some("gens") => {
                if gens.is_some() {
                    return Err(Error::parse(n, "duplicate `gens` line"));
                }
                gens = Some(toks.map(String::from).collect());
            }
            Some("rel") => rels.push((n, toks.map(String::from).collect())),
            Some("map") => {
                let parts: Vec<&str> = toks.collect();
                let [name, image] = parts.as_slice() else {
                    return Err(Error::parse(n, "expected `map <generator> <element>`"));
                };
                maps.push((n, name.to_string(), image.to_string()));
            }
            _ => return Err(Error::parse(n, format!("unrecognized line `{l}`"))),
        }
    }
    let gens = gens.ok_or_else(|| Error::parse(lines.line_no(), "missing `gens` line"))?;
    let mut index = HashMap::new();
    for (i, name) in gens.iter().enumerate() {
        if index.insert(name.clone(), i).is_some() {
            return Err(Error::parse(1, format!("generator `{name}` listed twice")));
        }
    }
    let mut relators = Vec::new();
    for (n, toks) in &rels {
        let mut letters = Vec::new();
        for t in toks {
            letters.extend(parse_letter(*n, t, &index)?);
        }
        relators.push(Word(letters));
    }
    let mut genmap: Vec<Option<usize>> = vec![None; gens.len()];
    for (n, name, image) in &maps {
        let &g = index
            .get(name)
            .ok_or_else(|| Error::parse(*n, format!("unknown generator `{name}`")))?;
        let img = image
            .strip_prefix('g')
            .unwrap_or(image)
            .parse::<usize>()
            .map_err(|_| Error::parse(*n, format!("bad element `{image}`")))?;
        if img >= group.order() {
            return Err(Error::parse(*n, format!("element {img} out of range")));
        }
        genmap[g] = Some(img);
    }
    if maps.is_empty() {
        if let Some(fam) = group.family() {
            let (_, defaults) = fam.default_presentation()?;
            for (i, slot) in genmap.iter_mut().enumerate() {
                *slot = defaults.get(i).copied();
            }
        }
    }
    let genmap: Vec<usize> = genmap
        .into_iter()
        .enumerate()
        .map(|(i, m)| m.ok_or_else(|| Error::input(format!("no image for generator `{}`", gens[i]))))
        .collect::<Result<_>>()?;
    let presentation = Presentation::new(gens, relators)?;
    bind_presentation(group, presentation, genmap)
}

/// Writes a marked group in the presentation format, with explicit `map` lines.
pub fn write_presentation(m: &MarkedGroup) -> String {
    let mut out = String::new();
    write_group(m.group(), &mut out);
    let p = m.presentation();
    out.push_str(&format!("gens {}\n", p.generator_names.join(" ")));
    for r in &p.relators {
        out.push_str(&format!("rel {}\n", p.format_word(r)));
    }
    for (i, name) in p.generator_names.iter().enumerate() {
        out.push_str(&format!("map {name} {}\n", m.generator_image(i)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_default_map() {
        let m = parse_presentation("# C6\ngroup cyclic 6\ngens x\nrel x x x x x x\n").unwrap();
        assert_eq!(m.presentation().deficiency(), 0);
        assert_eq!(m.generator_image(0), 1);
    }

    #[test]
    fn inverse_letters_and_maps() {
        let text = "group quaternion8\ngens x y\nrel x x y^-1 y^-1\nrel x y x y^-1\nmap x 1\nmap y 2\n";
        let m = parse_presentation(text).unwrap();
        assert_eq!(m.presentation().relator_count(), 2);
        assert_eq!(m.presentation().relators[0].len(), 4);
    }

    #[test]
    fn round_trip_catalog() {
        for e in crate::group::catalog() {
            let text = write_presentation(&e.marked);
            let back = parse_presentation(&text).unwrap();
            assert_eq!(back.presentation(), e.marked.presentation());
            assert_eq!(back.genmap(), e.marked.genmap());
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_presentation("group cyclic 2\ngens x\nrel x z\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_presentation("group cyclic 2\ngens x\nrel x x x\n").unwrap_err();
        assert!(matches!(err, Error::RelatorViolation { index: 0 }));
        assert!(parse_presentation("group nonsense\n").is_err());
    }

    #[test]
    fn extra_generator_needs_a_map() {
        let err = parse_presentation("group cyclic 2\ngens x y\nrel x x\nrel y\n").unwrap_err();
        assert!(err.to_string().contains("no image"));
        let ok = parse_presentation("group cyclic 2\ngens x y\nrel x x\nrel y\nmap x 1\nmap y 0\n");
        assert!(ok.is_ok());
    }
}
