#!/usr/bin/env python3
"""Regenerate the bundled toy corpus under data/toy.

Sentences come from a small template grammar with dependency heads, and word
choice follows a Zipf-like weighting so the degree distributions are skewed.
Output is fully determined by SEED.
"""

import random
from pathlib import Path

SEED = 20161016
N_SENTENCES = 200
OUT = Path(__file__).resolve().parent.parent / "data" / "toy"

EN = {
    "det": ["the", "a", "this", "every", "some", "that"],
    "adj": ["new", "old", "big", "small", "quiet", "red", "young", "strange", "early", "happy",
            "local", "bright"],
    "noun": ["company", "market", "city", "teacher", "river", "computer", "child", "letter",
             "garden", "window", "doctor", "village", "student", "island", "engine", "question",
             "mother", "paper", "station", "animal", "morning", "kitchen", "mountain", "report",
             "farmer", "bottle", "library", "friend", "summer", "camera", "family", "problem"],
    "verb": ["sees", "reads", "writes", "loves", "carries", "finds", "buys", "watches", "calls",
             "hears", "brings", "makes", "opens", "follows", "answers", "visits", "remembers",
             "covers", "moves", "builds"],
    "prep": ["in", "on", "near", "behind", "under", "with", "after", "about"],
    "adv": ["today", "often", "slowly", "again", "quickly", "never", "usually"],
    "aux": ["has", "will", "can", "did"],
    "conj": ["and", "but"],
}

HR = {
    "det": ["taj", "ovaj", "svaki", "neki", "onaj"],
    "adj": ["velik", "mali", "novi", "stari", "lijep", "dobar", "crveni", "bijeli", "mladi",
            "tihi", "tužni", "veseli"],
    "noun": ["čovjek", "prijatelj", "učitelj", "konj", "knjiga", "džep", "grad", "kuća", "voda",
             "škola", "pas", "mačka", "dijete", "brat", "sestra", "selo", "more", "ruka", "nož",
             "ljudi", "zemlja", "pjesma", "polje", "dan", "život", "ključ", "cvijet", "večer",
             "djevojka", "žena", "mjesec", "posao"],
    "verb": ["vidi", "čita", "piše", "voli", "nosi", "traži", "kupuje", "gleda", "zove", "čuje",
             "donosi", "pravi", "otvara", "prati", "posjećuje", "pamti", "pokriva", "gradi",
             "njeguje", "ljubi"],
    "prep": ["u", "na", "iz", "kod", "prema", "pored", "s", "nakon"],
    "adv": ["danas", "sutra", "često", "brzo", "polako", "opet", "uvijek"],
    "aux": ["je", "će", "može", "bi"],
    "conj": ["i", "ali"],
}

# Intentionally absent from the English lexicon so the omitted-word path runs.
LEXICON_GAPS = {"strange", "remembers", "usually", "library"}

EN_SYL = {
    "the": "the", "a": "a", "this": "this", "every": "ev-ery", "some": "some", "that": "that",
    "new": "new", "old": "old", "big": "big", "small": "small", "quiet": "qui-et", "red": "red",
    "young": "young", "strange": "strange", "early": "ear-ly", "happy": "hap-py",
    "local": "lo-cal", "bright": "bright", "company": "com-pa-ny", "market": "mar-ket",
    "city": "ci-ty", "teacher": "tea-cher", "river": "ri-ver", "computer": "com-pu-ter",
    "child": "child", "letter": "let-ter", "garden": "gar-den", "window": "win-dow",
    "doctor": "doc-tor", "village": "vil-lage", "student": "stu-dent", "island": "is-land",
    "engine": "en-gine", "question": "ques-tion", "mother": "mo-ther", "paper": "pa-per",
    "station": "sta-tion", "animal": "an-i-mal", "morning": "mor-ning", "kitchen": "kit-chen",
    "mountain": "moun-tain", "report": "re-port", "farmer": "far-mer", "bottle": "bot-tle",
    "library": "li-bra-ry", "friend": "friend", "summer": "sum-mer", "camera": "cam-e-ra",
    "family": "fam-i-ly", "problem": "prob-lem", "sees": "sees", "reads": "reads",
    "writes": "writes", "loves": "loves", "carries": "car-ries", "finds": "finds", "buys": "buys",
    "watches": "watch-es", "calls": "calls", "hears": "hears", "brings": "brings",
    "makes": "makes", "opens": "o-pens", "follows": "fol-lows", "answers": "an-swers",
    "visits": "vis-its", "remembers": "re-mem-bers", "covers": "cov-ers", "moves": "moves",
    "builds": "builds", "in": "in", "on": "on", "near": "near", "behind": "be-hind",
    "under": "un-der", "with": "with", "after": "af-ter", "about": "a-bout", "today": "to-day",
    "often": "of-ten", "slowly": "slow-ly", "again": "a-gain", "quickly": "quick-ly",
    "never": "nev-er", "usually": "u-su-al-ly", "has": "has", "will": "will", "can": "can",
    "did": "did", "and": "and", "but": "but",
}

HR_ONSETS = [
    "b", "c", "č", "ć", "d", "dž", "đ", "f", "g", "h", "j", "k", "l", "lj", "m", "n", "nj", "p",
    "r", "s", "š", "t", "v", "z", "ž",
    "bj", "bl", "br", "cv", "čl", "dj", "dr", "gl", "gr", "hr", "kl", "kn", "kr", "lj", "mj",
    "pj", "pl", "pr", "sj", "sl", "sm", "sn", "sp", "st", "str", "sv", "šk", "tr", "vj", "vr",
    "zn", "zv", "žv",
]


def zipf_choice(rng, words):
    weights = [1.0 / (r + 1) for r in range(len(words))]
    return rng.choices(words, weights=weights, k=1)[0]


def noun_phrase(rng, lex, head_of_np):
    """Returns tokens as (form, local_head) where local_head indexes the phrase or is None for
    the phrase head, which attaches to head_of_np."""
    toks = []
    if rng.random() < 0.6:
        toks.append([zipf_choice(rng, lex["det"]), "N"])
    if rng.random() < 0.45:
        toks.append([zipf_choice(rng, lex["adj"]), "N"])
    toks.append([zipf_choice(rng, lex["noun"]), head_of_np])
    return toks


def sentence(rng, lex):
    # Each token: [form, head] where head is "N" (phrase noun), "V", "P", or an absolute index.
    parts = []  # list of lists of [form, head-tag]
    subj = noun_phrase(rng, lex, "V")
    parts.append(subj)
    if rng.random() < 0.3:
        parts.append([[zipf_choice(rng, lex["aux"]), "V"]])
    verb_slot = len(parts)
    parts.append([[zipf_choice(rng, lex["verb"]), 0]])
    parts.append(noun_phrase(rng, lex, "V"))
    if rng.random() < 0.55:
        pp = [[zipf_choice(rng, lex["prep"]), "V"]] + noun_phrase(rng, lex, "P")
        parts.append(pp)
    if rng.random() < 0.3:
        parts.append([[zipf_choice(rng, lex["adv"]), "V"]])
    if rng.random() < 0.15:
        parts.append([[zipf_choice(rng, lex["conj"]), "V"]])
        parts.append(noun_phrase(rng, lex, "V"))
    parts.append([[".", "V"]])

    forms, heads = [], []
    verb_index = sum(len(p) for p in parts[:verb_slot]) + 1
    pos = 1
    for p in parts:
        noun_idx = prep_idx = None
        for k, (form, tag) in enumerate(p):
            if form in lex["noun"]:
                noun_idx = pos + k
            if form in lex["prep"] and k == 0 and len(p) > 1:
                prep_idx = pos + k
        for k, (form, tag) in enumerate(p):
            if tag == 0:
                h = 0
            elif tag == "V":
                h = verb_index
            elif tag == "N":
                h = noun_idx
            elif tag == "P":
                h = prep_idx
            else:
                h = tag
            forms.append(form)
            heads.append(h)
        pos += len(p)
    if forms[0] != ".":
        forms[0] = forms[0][0].upper() + forms[0][1:]
    return forms, heads


def write_conll(path, sents):
    with open(path, "w", encoding="utf-8") as f:
        for forms, heads in sents:
            for i, (form, h) in enumerate(zip(forms, heads), start=1):
                f.write(f"{i}\t{form}\t_\t_\t_\t_\t{h}\t_\t_\t_\n")
            f.write("\n")


def write_plain(path, sents):
    with open(path, "w", encoding="utf-8") as f:
        for forms, _ in sents:
            f.write(" ".join(forms[:-1]) + forms[-1] + "\n")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    rng = random.Random(SEED)
    for tag, lex in (("en", EN), ("hr", HR)):
        sents = [sentence(rng, lex) for _ in range(N_SENTENCES)]
        write_conll(OUT / f"{tag}.conll", sents)
        write_plain(OUT / f"{tag}.txt", sents)

    with open(OUT / "en.lexicon", "w", encoding="utf-8") as f:
        f.write("# word<TAB>syllables\n")
        for w in sorted(EN_SYL):
            if w not in LEXICON_GAPS:
                f.write(f"{w}\t{EN_SYL[w]}\n")

    with open(OUT / "hr.syllabifier", "w", encoding="utf-8") as f:
        f.write("# maximal-onset syllabification for the toy Croatian corpus\n")
        f.write("vowels: a e i o u\n")
        f.write("graphemes: lj nj dž\n")
        for o in sorted(set(HR_ONSETS)):
            f.write(o + "\n")


if __name__ == "__main__":
    main()
