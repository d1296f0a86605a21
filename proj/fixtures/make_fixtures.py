#!/usr/bin/env python3
"""Regenerates the bundled toy fixtures. Output is deterministic.

    python3 fixtures/make_fixtures.py

Writes:
  toy/synsets.tsv, toy/relations.tsv   toy taxonomy (50 synsets, 70 relations)
  seeds.tsv                           default seed set
  seedsets/*.tsv                      alternative seed sets for the sweep
  dev/corpus.tsv, dev/gold.tsv        gold-annotated development corpus
  corpus/train.tsv                    unannotated training corpus
  corpus/imbalanced.tsv               9:1 positive:negative distant labels
  eval/                               hand-counted 10-token evaluation case
  tune/                               lexicon size tuning cases
  sweep_broken/                       seed directory with one malformed file
"""

import os
import random

HERE = os.path.dirname(os.path.abspath(__file__))

# id, pos, lemmas, gloss, class (pos/neg/neu)
SYNSETS = [
    ("p01", "adjective", ["gut", "fein"], "von hoher Qualität und erfreulich", "pos"),
    ("p02", "adjective", ["schön", "hübsch"], "angenehm anzusehen und erfreulich", "pos"),
    ("p03", "adjective", ["toll", "großartig", "sehr gut"], "außerordentlich erfreulich und gut", "pos"),
    ("p04", "adjective", ["glücklich", "froh"], "voller Freude und erfreulich", "pos"),
    ("p05", "adjective", ["prima", "klasse"], "sehr gut und erfreulich", "pos"),
    ("p06", "adjective", ["exzellent", "hervorragend"], "von hoher Qualität und herausragend", "pos"),
    ("p07", "adjective", ["perfekt", "makellos"], "ohne Fehler und von hoher Qualität", "pos"),
    ("p08", "adjective", ["freundlich", "nett"], "angenehm im Umgang und erfreulich", "pos"),
    ("p09", "adjective", ["richtig", "korrekt"], "ohne Fehler und zutreffend", "pos"),
    ("p10", "adjective", ["positiv", "erfreulich"], "günstig und erfreulich", "pos"),
    ("p11", "adjective", ["vorbildlich", "beispielhaft"], "als Beispiel von hoher Qualität", "pos"),
    ("p12", "adjective", ["wunderbar", "herrlich"], "außerordentlich schön und erfreulich", "pos"),
    ("n01", "adjective", ["schlecht", "mies"], "von geringer Qualität und ärgerlich", "neg"),
    ("n02", "adjective", ["hässlich", "unschön"], "unangenehm anzusehen und ärgerlich", "neg"),
    ("n03", "adjective", ["schrecklich", "furchtbar"], "außerordentlich schlimm und ärgerlich", "neg"),
    ("n04", "adjective", ["traurig", "betrübt"], "voller Kummer und Leid", "neg"),
    ("n05", "adjective", ["böse", "gemein"], "voller Bosheit und schlimm", "neg"),
    ("n06", "adjective", ["falsch", "unrichtig"], "voller Fehler und unzutreffend", "neg"),
    ("n07", "adjective", ["negativ", "ungünstig"], "ungünstig und schlimm", "neg"),
    ("n08", "adjective", ["unfreundlich", "grob"], "unangenehm im Umgang und ärgerlich", "neg"),
    ("n09", "adjective", ["katastrophal", "verheerend"], "außerordentlich schlimm mit Schaden", "neg"),
    ("n10", "adjective", ["ärgerlich", "lästig"], "Ärger und Verdruss erregend", "neg"),
    ("n11", "adjective", ["dumm", "blöd"], "von geringem Verstand und ärgerlich", "neg"),
    ("n12", "adjective", ["schlimm", "übel"], "von geringer Qualität mit Schaden", "neg"),
    ("u01", "adjective", ["sachlich", "nüchtern"], "auf die Sache bezogen", "neu"),
    ("u02", "adjective", ["technisch"], "die Technik betreffend", "neu"),
    ("u03", "adjective", ["finanziell", "monetär"], "das Geld betreffend", "neu"),
    ("u04", "adjective", ["neutral", "unparteiisch"], "keiner Seite zugehörig", "neu"),
    ("u05", "adjective", ["politisch"], "die Politik betreffend", "neu"),
    ("u06", "adjective", ["statistisch"], "die Statistik betreffend", "neu"),
    ("u07", "adjective", ["öffentlich"], "die Allgemeinheit betreffend", "neu"),
    ("u08", "adjective", ["regional", "örtlich"], "eine Region betreffend", "neu"),
    ("o01", "noun", ["eigenschaft", "merkmal"], "kennzeichnende Art einer Sache", "neu"),
    ("o02", "noun", ["haus", "gebäude"], "Bauwerk zum Wohnen", "neu"),
    ("o03", "noun", ["auto", "wagen"], "Fahrzeug mit Motor", "neu"),
    ("o04", "noun", ["tag"], "Zeitraum von vierundzwanzig Stunden", "neu"),
    ("o05", "noun", ["woche"], "Zeitraum von sieben Tagen", "neu"),
    ("o06", "noun", ["stadt", "ort"], "größere Siedlung", "neu"),
    ("o07", "noun", ["straße"], "befestigter Weg in einer Stadt", "neu"),
    ("o08", "noun", ["zeit"], "Ablauf des Geschehens", "neu"),
    ("o09", "noun", ["wetter"], "Zustand der Atmosphäre", "neu"),
    ("o10", "noun", ["regierung"], "Leitung eines Staates", "neu"),
    ("o11", "noun", ["partei"], "politische Vereinigung", "neu"),
    ("o12", "noun", ["wahl"], "Abstimmung über Personen", "neu"),
    ("o13", "noun", ["papst"], "Oberhaupt der Kirche", "neu"),
    ("o14", "noun", ["kirche"], "Gebäude für Gottesdienste", "neu"),
    ("o15", "noun", ["zug", "bahn"], "Fahrzeug auf Schienen", "neu"),
    ("o16", "noun", ["gut", "landgut"], "landwirtschaftlicher Betrieb", "neu"),
    ("o17", "noun", ["zustand", "lage"], "Art des Bestehens", "neu"),
    ("o18", "noun", ["essen", "mahlzeit"], "Nahrung zu bestimmter Zeit", "neu"),
]

RELATIONS = [
    # positive cluster
    ("p01", "similar", "p05"), ("p01", "similar", "p03"), ("p03", "similar", "p06"),
    ("p06", "similar", "p07"), ("p02", "similar", "p12"), ("p04", "similar", "p08"),
    ("p01", "similar", "p09"), ("p11", "similar", "p07"), ("p10", "similar", "p01"),
    ("p12", "similar", "p03"), ("p05", "similar", "p06"), ("p08", "similar", "p02"),
    ("p04", "similar", "p10"), ("p11", "similar", "p06"),
    # negative cluster
    ("n01", "similar", "n12"), ("n01", "similar", "n03"), ("n03", "similar", "n09"),
    ("n02", "similar", "n10"), ("n04", "similar", "n05"), ("n05", "similar", "n08"),
    ("n06", "similar", "n11"), ("n07", "similar", "n01"), ("n12", "similar", "n09"),
    ("n10", "similar", "n08"), ("n11", "similar", "n01"), ("n04", "similar", "n07"),
    ("n03", "similar", "n12"), ("n02", "similar", "n05"),
    # antonyms
    ("p01", "antonym", "n01"), ("p02", "antonym", "n02"), ("p04", "antonym", "n04"),
    ("p09", "antonym", "n06"), ("p10", "antonym", "n07"), ("p08", "antonym", "n08"),
    ("p03", "antonym", "n03"), ("p12", "antonym", "n09"),
    # neutral cluster
    ("u01", "similar", "u04"), ("u02", "similar", "u06"), ("u03", "similar", "u06"),
    ("u05", "similar", "u07"), ("u07", "similar", "u08"), ("u01", "similar", "u02"),
    ("u04", "similar", "u05"), ("u03", "similar", "u05"),
    # taxonomy of nouns
    ("o02", "hypernym", "o14"), ("o14", "hyponym", "o02"), ("o04", "hypernym", "o08"),
    ("o05", "hypernym", "o08"), ("o03", "related", "o15"), ("o06", "related", "o07"),
    ("o10", "related", "o11"), ("o11", "related", "o12"), ("o13", "related", "o14"),
    ("o16", "hypernym", "o02"), ("o18", "related", "o04"), ("o09", "related", "o17"),
    ("o05", "related", "o04"), ("o10", "related", "u05"), ("o11", "related", "u05"),
    ("o12", "related", "u05"), ("o03", "related", "u02"), ("o15", "related", "u02"),
    # attributes
    ("p01", "hypernym", "o01"), ("n01", "hypernym", "o01"), ("u01", "hypernym", "o01"),
    ("o17", "hypernym", "o01"),
    # a weak path from the positive cluster into everyday nouns
    ("p07", "related", "o17"), ("o08", "related", "o09"), ("o04", "related", "o06"),
    ("o06", "related", "o02"),
]

SEEDS = [
    ("gut", "positive"), ("schön", "positive"), ("richtig", "positive"),
    ("glücklich", "positive"), ("positiv", "positive"), ("vorbildlich", "positive"),
    ("schlecht", "negative"), ("böse", "negative"), ("falsch", "negative"),
    ("traurig", "negative"), ("negativ", "negative"), ("ärgerlich", "negative"),
    ("sachlich", "neutral"), ("technisch", "neutral"), ("finanziell", "neutral"),
    ("neutral", "neutral"),
]

ALT_SEEDS = {
    "a_default.tsv": [(t, p, False) for t, p in SEEDS],
    "b_gold_precision.tsv": [("gut", "positive", False), ("schlecht", "negative", False)],
    "c_small.tsv": [("toll", "positive", False), ("schrecklich", "negative", False),
                    ("sachlich", "neutral", False)],
    "d_emoticons.tsv": [(":-?\\)+", "positive", True), (":-?\\(+", "negative", True),
                        ("gut", "positive", False), ("schlecht", "negative", False)],
}

FILLER = ["der", "die", "das", "ist", "und", "ein", "eine", "heute", "wir", "ich", "es",
          "war", "mit", "im", "am", "auf", "für", "so", "jetzt", "hier"]

INFLECT = {"gut": "gute", "schön": "schöne", "toll": "tolle", "schlecht": "schlechte",
           "böse": "bösen", "traurig": "traurige", "schrecklich": "schreckliche",
           "freundlich": "freundliche", "hässlich": "hässliche"}


def lemma_classes():
    cls = {}
    for sid, _, lemmas, _, c in SYNSETS:
        if sid.startswith("o"):
            continue
        for l in lemmas:
            cls[l] = c
    return cls


def write_taxonomy():
    assert len(SYNSETS) == 50, len(SYNSETS)
    assert len(RELATIONS) == 70, len(RELATIONS)
    os.makedirs(os.path.join(HERE, "toy"), exist_ok=True)
    with open(os.path.join(HERE, "toy", "synsets.tsv"), "w", encoding="utf-8", newline="\n") as f:
        f.write("# id\tpos\tlemmas\tgloss\n")
        for sid, pos, lemmas, gloss, _ in SYNSETS:
            f.write(f"{sid}\t{pos}\t{'|'.join(lemmas)}\t{gloss}\n")
    with open(os.path.join(HERE, "toy", "relations.tsv"), "w", encoding="utf-8", newline="\n") as f:
        f.write("# src\tkind\tdst\n")
        for s, k, d in RELATIONS:
            f.write(f"{s}\t{k}\t{d}\n")


def write_seeds():
    with open(os.path.join(HERE, "seeds.tsv"), "w", encoding="utf-8", newline="\n") as f:
        for t, p in SEEDS:
            f.write(f"{t}\t{p}\t1.000000\n")
    os.makedirs(os.path.join(HERE, "seedsets"), exist_ok=True)
    for name, entries in ALT_SEEDS.items():
        with open(os.path.join(HERE, "seedsets", name), "w", encoding="utf-8", newline="\n") as f:
            for t, p, pattern in entries:
                f.write(f"{t}\t{p}\t1.000000" + ("\tpattern" if pattern else "") + "\n")


def surface(lemma, rng):
    form = lemma
    if lemma in INFLECT and rng.random() < 0.4:
        form = INFLECT[lemma]
    if rng.random() < 0.2:
        form = form[:1].upper() + form[1:]
    return form


def write_dev():
    """Development corpus: polar lemmas of the taxonomy are gold polar terms."""
    rng = random.Random(20160301)
    cls = lemma_classes()
    polar = sorted(l for l, c in cls.items() if c != "neu")
    nouns = sorted({l for sid, _, lemmas, _, _ in SYNSETS if sid.startswith("o") for l in lemmas} - {"gut"})
    neutral_adj = sorted(l for l, c in cls.items() if c == "neu")
    docs, gold = [], []
    for d in range(240):
        doc_id = f"dev{d:03d}"
        tokens = []  # (form, lemma)
        n = rng.randint(6, 14)
        while len(tokens) < n:
            r = rng.random()
            if r < 0.45:
                w = rng.choice(FILLER)
                tokens.append((w, w))
            elif r < 0.70:
                w = rng.choice(nouns)
                tokens.append((w.capitalize(), w))
            elif r < 0.78:
                w = rng.choice(neutral_adj)
                tokens.append((surface(w, rng), w))
            else:
                w = rng.choice(polar)
                if " " in w:
                    a, b = w.split(" ")
                    gold.append((doc_id, len(tokens), len(tokens) + 2, cls[w], w))
                    tokens.append((a, a))
                    tokens.append((b, b))
                else:
                    gold.append((doc_id, len(tokens), len(tokens) + 1, cls[w], surface(w, rng)))
                    tokens.append((gold[-1][4], w))
        docs.append((doc_id, tokens))
    os.makedirs(os.path.join(HERE, "dev"), exist_ok=True)
    with open(os.path.join(HERE, "dev", "corpus.tsv"), "w", encoding="utf-8", newline="\n") as f:
        for doc_id, tokens in docs:
            f.write(f"#doc {doc_id}\n")
            for form, lemma in tokens:
                f.write(f"{form}\t{lemma}\n")
            f.write("\n")
    names = {"pos": "positive", "neg": "negative"}
    with open(os.path.join(HERE, "dev", "gold.tsv"), "w", encoding="utf-8", newline="\n") as f:
        for doc_id, s, e, c, surf in gold:
            f.write(f"{doc_id}\t{s}\t{e}\t{names[c]}\t{surf}\n")


def write_train():
    """Unannotated training corpus: polar words co-occur with seeds of their class."""
    rng = random.Random(4242)
    cls = lemma_classes()
    pos_words = sorted(l for l, c in cls.items() if c == "pos" and " " not in l)
    neg_words = sorted(l for l, c in cls.items() if c == "neg" and " " not in l)
    pos_seeds = [t for t, p in SEEDS if p == "positive"]
    neg_seeds = [t for t, p in SEEDS if p == "negative"]
    nouns = sorted({l for sid, _, lemmas, _, _ in SYNSETS if sid.startswith("o") for l in lemmas} - {"gut"})
    os.makedirs(os.path.join(HERE, "corpus"), exist_ok=True)
    with open(os.path.join(HERE, "corpus", "train.tsv"), "w", encoding="utf-8", newline="\n") as f:
        for d in range(1500):
            r = rng.random()
            tokens = []
            n = rng.randint(6, 12)
            if r < 0.5:
                seeds, words, emo = pos_seeds, pos_words, ":-)"
            elif r < 0.85:
                seeds, words, emo = neg_seeds, neg_words, ":-("
            else:
                seeds, words, emo = [], [], None
            while len(tokens) < n:
                x = rng.random()
                if seeds and x < 0.15:
                    w = rng.choice(seeds)
                elif words and x < 0.35:
                    w = rng.choice(words)
                elif x < 0.6:
                    w = rng.choice(nouns)
                else:
                    w = rng.choice(FILLER)
                tokens.append((surface(w, rng), w))
            if seeds and not any(l in seeds for _, l in tokens):
                w = rng.choice(seeds)
                tokens.insert(rng.randrange(len(tokens) + 1), (w, w))
            if emo and rng.random() < 0.3:
                tokens.append((emo, emo))
            f.write(f"#doc train{d:04d}\n")
            for form, lemma in tokens:
                f.write(f"{form}\t{lemma}\n")
            f.write("\n")


def write_lines(path, lines):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for line in lines:
            f.write(line + "\n")


def vertical(docs):
    lines = []
    for doc_id, tokens in docs:
        lines.append(f"#doc {doc_id}")
        lines.extend(f"{form}\t{lemma}" for form, lemma in tokens)
        lines.append("")
    return lines


def write_small_cases():
    """Hand-sized cases with known answers."""
    words = ["das", "ist", "sehr", "gut", "und", "der", "tag", "war", "lang", "heute"]
    write_lines(os.path.join(HERE, "eval", "corpus.tsv"), vertical([("h1", [(w, w) for w in words])]))
    write_lines(os.path.join(HERE, "eval", "gold.tsv"), ["h1\t2\t4\tpositive\tsehr gut"])
    # the span is matched, "lang" is a spurious negative match
    write_lines(os.path.join(HERE, "eval", "lexicon.tsv"),
                ["sehr gut\tpositive\t1.000000", "lang\tnegative\t0.500000"])
    # both spans annotated: the same lexicon is then perfect
    write_lines(os.path.join(HERE, "eval", "gold_perfect.tsv"),
                ["h1\t2\t4\tpositive\tsehr gut", "h1\t8\t9\tnegative\tlang"])
    write_lines(os.path.join(HERE, "eval", "empty.tsv"), [])

    tune_words = [("Gut", "gut"), ("toll", "toll"), ("Tag", "tag"), ("schlecht", "schlecht"),
                  ("heute", "heute"), ("prima", "prima")]
    write_lines(os.path.join(HERE, "tune", "corpus.tsv"), vertical([("t1", tune_words)]))
    write_lines(os.path.join(HERE, "tune", "gold.tsv"),
                ["t1\t0\t1\tpositive", "t1\t1\t2\tpositive", "t1\t3\t4\tnegative",
                 "t1\t5\t6\tpositive"])
    write_lines(os.path.join(HERE, "tune", "seeds.tsv"),
                ["gut\tpositive\t1.000000", "schlecht\tnegative\t1.000000"])
    write_lines(os.path.join(HERE, "tune", "helpful_then_harmful.tsv"),
                ["toll\tpositive\t0.900000", "tag\tnegative\t0.800000", "prima\tpositive\t0.700000"])
    write_lines(os.path.join(HERE, "tune", "harmful.tsv"),
                ["tag\tnegative\t0.900000", "heute\tpositive\t0.800000"])

    with open(os.path.join(HERE, "seedsets", "a_default.tsv"), encoding="utf-8") as f:
        default = f.read().splitlines()
    write_lines(os.path.join(HERE, "sweep_broken", "a_default.tsv"), default)
    write_lines(os.path.join(HERE, "sweep_broken", "b_broken.tsv"), ["gut\tpositive", "schlecht\tkaputt"])

    docs = [(f"i{d}", [("gut", "gut"), ("tag", "tag")]) for d in range(9)]
    docs.append(("i9", [("schlecht", "schlecht"), ("tag", "tag")]))
    write_lines(os.path.join(HERE, "corpus", "imbalanced.tsv"), vertical(docs))


if __name__ == "__main__":
    write_taxonomy()
    write_seeds()
    write_dev()
    write_train()
    write_small_cases()
