"""Engine configuration: a single JSON file, documented and round-trippable.

Wordlist paths resolve relative to the config file. Rates, costs, and
thresholds may be integers, floats, or strings; they are parsed into exact
rationals (floats go through their decimal string form, so "0.1" means
one tenth).

Schema sketch::

    {
      "alphabet": {"builtin": "alnum62"} | {"name": ..., "characters": ...},
      "bounds": {"min_length": 1, "max_length": 16},
      "rules": [
        {"id": "digit", "kind": "char_class", "characters": "0123456789",
         "min_length": 1, "max_length": 1},
        {"id": "words", "kind": "wordlist", "path": "words.txt",
         "case_sensitive": true},
        {"id": "mangled", "kind": "mangled_wordlist", "path": "words.txt",
         "transforms": [{"kind": "capitalize"}, {"kind": "affix", "suffix": "1"}]}
      ],
      "topology": ["digit", "words"],
      "protection_functions": [{"id": ..., "cost_model_seconds_per_guess": ...,
                                "description": ...}],
      "adversaries": [{"id": ..., "baseline_year": ..., "baseline_guess_rate": ...,
                       "scaling": {"doubling_period_years": 2} | {"table": {...}},
                       "parallelism": 1, "randomize_rule_order": false}],
      "defaults": {"adversary": ..., "protection": "fast_hash",
                   "t_seconds": 7776000, "year": 2015},
      "limits": {"max_segments": 8, "max_parsings": 1048576},
      "literal_scaling": false
    }
"""

from __future__ import annotations

import json
import string
from fractions import Fraction
from pathlib import Path

from .complexity import PolicyBounds
from .engine import Engine
from .errors import ValidationError
from .parsing import EnumerationLimits
from .rules import (
    Alphabet,
    Rule,
    RuleCombination,
    Topology,
    Transform,
    load_wordlist,
    make_char_class_rule,
    make_mangled_rule,
    make_wordlist_rule,
)
from .strength import (
    PROTECTION_PRESETS,
    AdversaryModel,
    ProtectionFunction,
    constant_parallelism,
    doubling_scaling,
    table_scaling,
)

BUILTIN_ALPHABETS = {
    "lowercase": string.ascii_lowercase,
    "uppercase": string.ascii_uppercase,
    "digits": string.digits,
    "letters52": string.ascii_letters,
    "alnum62": string.ascii_letters + string.digits,
    "printable94": "".join(c for c in string.printable if not c.isspace()),
}


def to_fraction(value, field_name: str) -> Fraction:
    if isinstance(value, bool) or value is None:
        raise ValidationError(f"expected a number for {field_name}", field=field_name)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, (float, str)):
        try:
            return Fraction(str(value))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"bad number for {field_name}: {exc}", field=field_name)
    raise ValidationError(f"expected a number for {field_name}", field=field_name)


def _parse_alphabet(raw: dict) -> Alphabet:
    if "builtin" in raw:
        name = raw["builtin"]
        if name not in BUILTIN_ALPHABETS:
            raise ValidationError(
                f"unknown builtin alphabet {name!r} (have: {sorted(BUILTIN_ALPHABETS)})",
                field="alphabet",
            )
        return Alphabet.from_string(name, BUILTIN_ALPHABETS[name])
    if "characters" not in raw:
        raise ValidationError("alphabet needs 'builtin' or 'characters'", field="alphabet")
    return Alphabet.from_string(raw.get("name", "custom"), raw["characters"])


def _parse_transform(raw: dict) -> Transform:
    return Transform(
        kind=raw.get("kind", "identity"),
        prefix=raw.get("prefix", ""),
        suffix=raw.get("suffix", ""),
        leet_map=tuple((k, v) for k, v in raw.get("mapping", {}).items()),
    )


def _parse_rule(raw: dict, alphabet: Alphabet, base_dir: Path) -> Rule:
    rule_id = raw.get("id")
    kind = raw.get("kind")
    if not rule_id or not kind:
        raise ValidationError("each rule needs 'id' and 'kind'", field="rules")
    if kind == "char_class":
        return make_char_class_rule(
            rule_id,
            alphabet,
            raw.get("characters", ""),
            int(raw.get("min_length", 1)),
            int(raw.get("max_length", 1)),
        )
    if kind in ("wordlist", "mangled_wordlist"):
        path = raw.get("path")
        if not path:
            raise ValidationError(f"rule {rule_id!r} needs 'path'", field="rules")
        resolved = (base_dir / path).resolve() if not Path(path).is_absolute() else Path(path)
        if not resolved.exists():
            raise ValidationError(f"wordlist not found: {resolved}", field="rules")
        entries = load_wordlist(resolved)
        if kind == "wordlist":
            return make_wordlist_rule(
                rule_id, alphabet, entries, case_sensitive=bool(raw.get("case_sensitive", True))
            )
        transforms = tuple(_parse_transform(t) for t in raw.get("transforms", []))
        return make_mangled_rule(rule_id, alphabet, entries, transforms)
    raise ValidationError(f"unknown rule kind {kind!r} for {rule_id!r}", field="rules")


def _parse_adversary(raw: dict, combination: RuleCombination, topology: Topology | None) -> AdversaryModel:
    adversary_id = raw.get("id")
    if not adversary_id:
        raise ValidationError("each adversary needs an 'id'", field="adversaries")
    baseline_year = int(raw.get("baseline_year", 2015))

    scaling = None
    raw_scaling = raw.get("scaling")
    if raw_scaling is not None:
        if "table" in raw_scaling:
            scaling = table_scaling(
                {int(y): to_fraction(v, "scaling.table") for y, v in raw_scaling["table"].items()}
            )
        elif "doubling_period_years" in raw_scaling:
            scaling = doubling_scaling(baseline_year, int(raw_scaling["doubling_period_years"]))
        else:
            raise ValidationError(
                "scaling needs 'table' or 'doubling_period_years'", field="adversaries"
            )

    parallelism = None
    if "parallelism" in raw:
        parallelism = constant_parallelism(int(raw["parallelism"]))

    return AdversaryModel(
        id=adversary_id,
        baseline_year=baseline_year,
        guess_rate=to_fraction(raw.get("baseline_guess_rate", 1), "baseline_guess_rate"),
        rules=combination,
        topology=topology,
        scaling=scaling,
        parallelism=parallelism,
        randomize_rule_order=bool(raw.get("randomize_rule_order", False)),
        aux=dict(raw.get("aux", {})),
    )


def build_engine(raw: dict, base_dir: Path | str = ".") -> Engine:
    base_dir = Path(base_dir)
    if "alphabet" not in raw:
        raise ValidationError("config needs an 'alphabet'", field="alphabet")
    alphabet = _parse_alphabet(raw["alphabet"])

    raw_bounds = raw.get("bounds", {})
    bounds = PolicyBounds(
        alphabet=alphabet,
        min_length=int(raw_bounds.get("min_length", 1)),
        max_length=int(raw_bounds.get("max_length", 16)),
    )

    raw_rules = raw.get("rules", [])
    if not raw_rules:
        raise ValidationError("config needs at least one rule", field="rules")
    rules = tuple(_parse_rule(r, alphabet, base_dir) for r in raw_rules)
    combination = RuleCombination(rules=rules)

    topology = None
    if raw.get("topology"):
        topology = Topology(
            ordered_rules=tuple(combination.by_id(rid) for rid in raw["topology"])
        )

    protections = dict(PROTECTION_PRESETS)
    for p in raw.get("protection_functions", []):
        if "id" not in p:
            raise ValidationError("protection needs an 'id'", field="protection_functions")
        protections[p["id"]] = ProtectionFunction(
            id=p["id"],
            cost_model=to_fraction(
                p.get("cost_model_seconds_per_guess", 1), "cost_model_seconds_per_guess"
            ),
            description=p.get("description", ""),
        )

    raw_adversaries = raw.get("adversaries", [])
    if not raw_adversaries:
        raw_adversaries = [
            {"id": "default", "baseline_year": 2015, "baseline_guess_rate": 10**10}
        ]
    adversaries = {}
    for a in raw_adversaries:
        model = _parse_adversary(a, combination, topology)
        if model.id in adversaries:
            raise ValidationError(f"duplicate adversary id {model.id!r}", field="adversaries")
        adversaries[model.id] = model

    defaults = raw.get("defaults", {})
    raw_limits = raw.get("limits", {})
    limits = EnumerationLimits(
        max_segments=int(raw_limits.get("max_segments", 8)),
        max_parsings=int(raw_limits.get("max_parsings", 2**20)),
    )

    return Engine(
        alphabet=alphabet,
        combination=combination,
        bounds=bounds,
        limits=limits,
        protections=protections,
        adversaries=adversaries,
        default_protection=defaults.get("protection", "fast_hash"),
        default_adversary=defaults.get("adversary", next(iter(adversaries))),
        threshold_seconds=to_fraction(defaults.get("t_seconds", 90 * 24 * 3600), "t_seconds"),
        evaluation_year=int(defaults.get("year", 2015)),
        topology=topology,
        literal_scaling=bool(raw.get("literal_scaling", False)),
        source=raw,
    )


def load_engine(path: str | Path) -> Engine:
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise ValidationError(f"config file not found: {path}", field="config")
    except json.JSONDecodeError as exc:
        raise ValidationError(f"config is not valid JSON: {exc}", field="config")
    return build_engine(raw, base_dir=path.parent)


def default_config() -> dict:
    """Built-in configuration used when no config file is given: a 62-symbol
    alphanumeric policy with bare character-class rules."""
    return {
        "alphabet": {"builtin": "alnum62"},
        "bounds": {"min_length": 1, "max_length": 16},
        "rules": [
            {"id": "digits", "kind": "char_class", "characters": string.digits,
             "min_length": 1, "max_length": 16},
            {"id": "lowercase", "kind": "char_class", "characters": string.ascii_lowercase,
             "min_length": 1, "max_length": 16},
            {"id": "uppercase", "kind": "char_class", "characters": string.ascii_uppercase,
             "min_length": 1, "max_length": 16},
        ],
        "adversaries": [
            {"id": "default", "baseline_year": 2025, "baseline_guess_rate": 10**10}
        ],
        "defaults": {
            "adversary": "default",
            "protection": "fast_hash",
            "t_seconds": 90 * 24 * 3600,
            "year": 2025,
        },
    }


def default_engine() -> Engine:
    return build_engine(default_config())
