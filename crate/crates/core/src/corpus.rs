//! Built-in corpus of named arrangements used by the CLI, the fixtures, and
//! the verification suites.

use crate::arrangement::Arrangement;

pub struct CorpusEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub arrangement: Arrangement,
}

fn plain(text: &str) -> Arrangement {
    Arrangement::parse_plain(text).expect("corpus entry is valid")
}

/// The named corpus: Boolean arrangements with their complete factorizations,
/// generic line pencils, the three-lines arrangement factored completely, the
/// essentialized braid, the four-plane example with its complete
/// factorization, the non-reduced (x, x, y), and a rank-3 supersolvable
/// arrangement (the graphic arrangement of K4 minus an edge, essentialized).
pub fn builtin_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();

    let boolean = |n: usize| {
        let mut text = format!("{n} {n}\n");
        for i in 0..n {
            let coords: Vec<&str> = (0..n).map(|j| if i == j { "1" } else { "0" }).collect();
            let mults: Vec<&str> = (0..n).map(|j| if i == j { "1" } else { "0" }).collect();
            text.push_str(&format!("{} : {}\n", coords.join(" "), mults.join(" ")));
        }
        plain(&text)
    };
    out.push(CorpusEntry {
        name: "boolean1",
        description: "normal crossing x, complete factorization",
        arrangement: boolean(1),
    });
    out.push(CorpusEntry {
        name: "boolean2",
        description: "normal crossing xy, complete factorization",
        arrangement: boolean(2),
    });
    out.push(CorpusEntry {
        name: "boolean3",
        description: "normal crossing xyz, complete factorization",
        arrangement: boolean(3),
    });
    out.push(CorpusEntry {
        name: "boolean4",
        description: "normal crossing in C^4, complete factorization",
        arrangement: boolean(4),
    });

    // d distinct concurrent lines in C^2, single factor
    let generic_lines = |d: usize| {
        let rows = ["1 0", "0 1", "1 1", "1 2", "1 3", "1 4"];
        let mut text = String::from("2 1\n");
        for row in rows.iter().take(d) {
            text.push_str(&format!("{row} : 1\n"));
        }
        plain(&text)
    };
    let line_names = ["generic-2-2", "generic-2-3", "generic-2-4", "generic-2-5", "generic-2-6"];
    let line_descriptions = [
        "2 generic lines in C^2, single factor",
        "3 generic lines in C^2, single factor",
        "4 generic lines in C^2, single factor",
        "5 generic lines in C^2, single factor",
        "6 generic lines in C^2, single factor",
    ];
    for (i, (&name, &description)) in line_names.iter().zip(&line_descriptions).enumerate() {
        out.push(CorpusEntry {
            name,
            description,
            arrangement: generic_lines(i + 2),
        });
    }

    out.push(CorpusEntry {
        name: "xy-x+y",
        description: "three concurrent lines with complete factorization (x, y, x+y)",
        arrangement: plain("2 3\n1 0 : 1 0 0\n0 1 : 0 1 0\n1 1 : 0 0 1"),
    });

    out.push(CorpusEntry {
        name: "braid-3",
        description: "braid arrangement (x-y)(y-z)(x-z), essentialized to rank 2",
        arrangement: plain("3 1\n1 -1 0 : 1\n0 1 -1 : 1\n1 0 -1 : 1")
            .essentialize()
            .0,
    });

    out.push(CorpusEntry {
        name: "budur-example",
        description: "xyz(x+y+z) with its complete factorization (x, y, z, x+y+z)",
        arrangement: plain(
            "3 4\n1 0 0 : 1 0 0 0\n0 1 0 : 0 1 0 0\n0 0 1 : 0 0 1 0\n1 1 1 : 0 0 0 1",
        ),
    });

    out.push(CorpusEntry {
        name: "x2y",
        description: "non-reduced x^2 y with complete factorization (x, x, y)",
        arrangement: plain("2 3\n1 0 : 1 1 0\n0 1 : 0 0 1"),
    });

    out.push(CorpusEntry {
        name: "supersolvable-3",
        description: "graphic arrangement of K4 minus an edge, essentialized (supersolvable, exponents 1,2,2)",
        arrangement: plain(
            "4 1\n1 -1 0 0 : 1\n1 0 -1 0 : 1\n1 0 0 -1 : 1\n0 1 -1 0 : 1\n0 1 0 -1 : 1",
        )
        .essentialize()
        .0,
    });

    out
}

pub fn corpus_entry(name: &str) -> Option<CorpusEntry> {
    builtin_corpus().into_iter().find(|e| e.name == name)
}
