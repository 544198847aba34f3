"""Word-level inflection data for the rule lemmatizer.

Three tables, consulted in this order by preprocess.lemmatize:

IRREGULAR    inflected form -> dictionary form for irregular verbs and nouns
             (plus the irregular comparatives). Lookup beats every rule.
PATCHES      regular forms the suffix heuristics would mangle (silent-e
             restoration gaps, consonant-doubling ambiguity, -le verbs).
KEEP_AS_IS   words that look inflected but are not; rules must not touch.

COMPARATIVES maps common -er/-est forms to their base. Stripping those
suffixes blindly would corrupt ordinary words ("after" -> "aft",
"number" -> "numb"), so the rule only fires through this table.
"""

from __future__ import annotations

# ---------------------------------------------------------------------------
# irregular verbs and nouns
# ---------------------------------------------------------------------------

IRREGULAR: dict[str, str] = {
    # be / have / do / go and friends
    "am": "be", "is": "be", "are": "be", "was": "be", "were": "be",
    "been": "be", "being": "be",
    "has": "have", "had": "have", "having": "have",
    "does": "do", "did": "do", "done": "do", "doing": "do",
    "goes": "go", "went": "go", "gone": "go", "going": "go",
    # common irregular verbs (past / participle forms)
    "said": "say", "made": "make", "knew": "know", "known": "know",
    "thought": "think", "took": "take", "taken": "take",
    "saw": "see", "seen": "see", "came": "come", "got": "get",
    "gotten": "get", "gave": "give", "given": "give", "found": "find",
    "told": "tell", "became": "become", "shown": "show", "left": "leave",
    "felt": "feel", "brought": "bring", "began": "begin", "begun": "begin",
    "kept": "keep", "held": "hold", "wrote": "write", "written": "write",
    "stood": "stand", "heard": "hear", "meant": "mean", "met": "meet",
    "ran": "run", "paid": "pay", "sat": "sit", "spoke": "speak",
    "spoken": "speak", "lay": "lie", "lain": "lie", "led": "lead",
    "grew": "grow", "grown": "grow", "lost": "lose", "fell": "fall",
    "fallen": "fall", "sent": "send", "built": "build",
    "understood": "understand", "misunderstood": "misunderstand",
    "drew": "draw", "drawn": "draw", "broke": "break", "broken": "break",
    "spent": "spend", "rose": "rise", "risen": "rise", "drove": "drive",
    "driven": "drive", "bought": "buy", "wore": "wear", "worn": "wear",
    "chose": "choose", "chosen": "choose", "sought": "seek",
    "threw": "throw", "thrown": "throw", "caught": "catch",
    "dealt": "deal", "won": "win", "forgot": "forget",
    "forgotten": "forget", "sold": "sell", "fought": "fight",
    "bore": "bear", "borne": "bear", "beaten": "beat", "hung": "hang",
    "struck": "strike", "slept": "sleep", "shook": "shake",
    "shaken": "shake", "rode": "ride", "ridden": "ride", "fed": "feed",
    "shot": "shoot", "flew": "fly", "flown": "fly", "stole": "steal",
    "stolen": "steal", "sang": "sing", "sung": "sing", "swam": "swim",
    "swum": "swim", "froze": "freeze", "frozen": "freeze",
    "bound": "bind", "swung": "swing", "taught": "teach", "woke": "wake",
    "woken": "wake", "hid": "hide", "hidden": "hide", "bit": "bite",
    "bitten": "bite", "blew": "blow", "blown": "blow", "swore": "swear",
    "sworn": "swear", "tore": "tear", "torn": "tear", "lit": "light",
    "slid": "slide", "stuck": "stick", "spun": "spin", "dug": "dig",
    "sprang": "spring", "sprung": "spring", "arose": "arise",
    "arisen": "arise", "awoke": "awake", "bent": "bend", "bled": "bleed",
    "bred": "breed", "clung": "cling", "crept": "creep", "fled": "flee",
    "flung": "fling", "forbade": "forbid", "forbidden": "forbid",
    "forgave": "forgive", "forgiven": "forgive", "ground": "grind",
    "knelt": "kneel", "lent": "lend", "shone": "shine",
    "shrank": "shrink", "shrunk": "shrink", "sank": "sink",
    "sunk": "sink", "slew": "slay", "slain": "slay", "stung": "sting",
    "stank": "stink", "stunk": "stink", "strode": "stride",
    "strove": "strive", "striven": "strive", "swept": "sweep",
    "wove": "weave", "woven": "weave", "wept": "weep", "wound": "wind",
    "withdrew": "withdraw", "withdrawn": "withdraw", "proven": "prove",
    "ate": "eat", "eaten": "eat", "drank": "drink", "drunk": "drink",
    "swollen": "swell", "trod": "tread", "underwent": "undergo",
    "undergone": "undergo", "undertook": "undertake",
    "undertaken": "undertake", "upheld": "uphold", "wrung": "wring",
    "overcame": "overcome", "overrode": "override",
    "overridden": "override", "overwrote": "overwrite",
    "overwritten": "overwrite", "rewrote": "rewrite",
    "rewritten": "rewrite", "rebuilt": "rebuild", "redid": "redo",
    "redone": "redo", "undid": "undo", "undone": "undo",
    "mistook": "mistake", "mistaken": "mistake",
    "dove": "dive", "sawn": "saw", "sewn": "sew", "laid": "lay",
    # irregular nouns
    "children": "child", "men": "man", "women": "woman", "feet": "foot",
    "teeth": "tooth", "mice": "mouse", "geese": "goose", "oxen": "ox",
    "dice": "die", "lives": "life", "wives": "wife", "knives": "knife",
    "leaves": "leaf", "halves": "half", "selves": "self",
    "shelves": "shelf", "wolves": "wolf", "loaves": "loaf",
    "thieves": "thief", "calves": "calf", "scarves": "scarf",
    "indices": "index", "matrices": "matrix", "vertices": "vertex",
    "appendices": "appendix", "analyses": "analysis", "crises": "crisis",
    "theses": "thesis", "hypotheses": "hypothesis",
    "phenomena": "phenomenon", "criteria": "criterion", "axes": "axis",
    "radii": "radius", "foci": "focus", "fungi": "fungus",
    "nuclei": "nucleus", "stimuli": "stimulus", "syllabi": "syllabus",
    "alumni": "alumnus", "curricula": "curriculum", "schemata": "schema",
    # irregular comparatives
    "better": "good", "best": "good", "worse": "bad", "worst": "bad",
    "less": "little", "least": "little", "more": "much", "most": "much",
    "further": "far", "furthest": "far", "farther": "far",
    "farthest": "far",
}

# ---------------------------------------------------------------------------
# regular forms the suffix heuristics get wrong
# ---------------------------------------------------------------------------

PATCHES: dict[str, str] = {
    # doubling that is part of the lemma, not the inflection
    "added": "add", "adding": "add",
    # -le / silent-e verbs the CVC restore test misses
    "handled": "handle", "handling": "handle",
    "enabled": "enable", "enabling": "enable",
    "disabled": "disable", "disabling": "disable",
    "bundled": "bundle", "bundling": "bundle",
    "scheduled": "schedule", "scheduling": "schedule",
    "toggled": "toggle", "toggling": "toggle",
    "sampled": "sample", "sampling": "sample",
    "assembled": "assemble", "assembling": "assemble",
    "recycled": "recycle", "recycling": "recycle",
    "doubled": "double", "doubling": "double",
    "resolved": "resolve", "resolving": "resolve",
    "involved": "involve", "involving": "involve",
    "received": "receive", "receiving": "receive",
    "achieved": "achieve", "achieving": "achieve",
    "believed": "believe", "believing": "believe",
    "required": "require", "requiring": "require",
    "merged": "merge", "merging": "merge",
    "changed": "change", "changing": "change",
    "managed": "manage", "managing": "manage",
    "packaged": "package", "packaging": "package",
    "caused": "cause", "causing": "cause",
    "parsed": "parse", "parsing": "parse",
    "released": "release", "releasing": "release",
    "increased": "increase", "increasing": "increase",
    "decreased": "decrease", "decreasing": "decrease",
    "reused": "reuse", "reusing": "reuse",
    "created": "create", "creating": "create",
    "cached": "cache", "caching": "cache",
    "cancelled": "cancel", "cancelling": "cancel",
    "labelled": "label", "labelling": "label",
    "modelled": "model", "modelling": "model",
    # -es plurals of -us / -o nouns the stripper cannot see
    "statuses": "status", "buses": "bus", "viruses": "virus",
    "bonuses": "bonus", "corpuses": "corpus", "heroes": "hero",
    "echoes": "echo", "zeroes": "zero",
    # -ies forms that are not -y plurals
    "movies": "movie", "cookies": "cookie",
}

# ---------------------------------------------------------------------------
# words that look inflected but must pass through unchanged
# ---------------------------------------------------------------------------

KEEP_AS_IS: frozenset[str] = frozenset({
    # adverbs / prepositions / conjunctions ending in s
    "always", "perhaps", "thus", "whereas", "besides", "unless",
    "across", "towards", "sometimes", "its", "yes", "news", "chaos",
    "series", "species", "means", "alias", "bias", "canvas", "atlas",
    "plus", "minus",
    # -ing words that are not gerunds of shorter lemmas
    "nothing", "something", "anything", "everything", "during",
    "pending", "morning", "evening",
    # -ed / -eed words that are not past tenses
    "hundred", "sacred", "red", "need", "speed", "feed", "seed",
    "embed", "shed", "bed", "wicked", "indeed", "exceed", "proceed",
    "succeed", "breed",
})

# ---------------------------------------------------------------------------
# comparative / superlative whitelist
# ---------------------------------------------------------------------------

_COMPARATIVE_BASES: dict[str, str] = {
    "bigger": "big", "biggest": "big",
    "smaller": "small", "smallest": "small",
    "larger": "large", "largest": "large",
    "faster": "fast", "fastest": "fast",
    "slower": "slow", "slowest": "slow",
    "newer": "new", "newest": "new",
    "older": "old", "oldest": "old",
    "longer": "long", "longest": "long",
    "shorter": "short", "shortest": "short",
    "higher": "high", "highest": "high",
    "lower": "low", "lowest": "low",
    "earlier": "early", "earliest": "early",
    "later": "late", "latest": "late",
    "easier": "easy", "easiest": "easy",
    "harder": "hard", "hardest": "hard",
    "simpler": "simple", "simplest": "simple",
    "cleaner": "clean", "cleanest": "clean",
    "safer": "safe", "safest": "safe",
    "stronger": "strong", "strongest": "strong",
    "weaker": "weak", "weakest": "weak",
    "closer": "close", "closest": "close",
    "deeper": "deep", "deepest": "deep",
    "wider": "wide", "widest": "wide",
    "narrower": "narrow", "narrowest": "narrow",
    "cheaper": "cheap", "cheapest": "cheap",
    "quicker": "quick", "quickest": "quick",
    "smarter": "smart", "smartest": "smart",
    "nicer": "nice", "nicest": "nice",
    "greater": "great", "greatest": "great",
    "fewer": "few", "fewest": "few",
    "tighter": "tight", "tightest": "tight",
    "looser": "loose", "loosest": "loose",
}

COMPARATIVES = _COMPARATIVE_BASES
