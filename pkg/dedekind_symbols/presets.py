"""
Group presets
Loads generator tables from JSON and validates relations, memberships and symbol values on load
"""

import json
import logging
from dataclasses import replace
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Dict, Union

from .exact_core import IDENTITY, GroupData, ModZ, arith, mat_pow, parse_matrix
from .exceptions import DedekindError, PresetError
from .higher_order import AffineModZ, exact_symbol
from .symbols_congruence import S_elliptic
from .words import GroupPreset, eval_word, parse_word

logger = logging.getLogger(__name__)

PRESET_DIR = Path(__file__).parent / "presets"

MEMBERSHIPS = ("sl2z", "gamma0", "gamma0_plus")


def _star_value(text: str) -> AffineModZ:
    if text == "X_B":
        return AffineModZ(ModZ(Fraction(0)), 1)
    return AffineModZ(ModZ(Fraction(text)))


def _volume(membership: str, level: int) -> Fraction:
    data = arith(level)
    if membership == "gamma0_plus":
        return data.volume_plus
    return data.volume_gamma0


def build_preset(raw: Dict) -> GroupPreset:
    """Build a preset from its JSON form and check it against the exact formulas"""
    try:
        name = raw["name"]
        membership = raw["membership"]
        level = int(raw.get("level", 1))
        if membership not in MEMBERSHIPS:
            raise PresetError(f"preset {name}: unknown membership {membership!r}")

        generators, orders, homology, symbols = {}, {}, {}, {}
        star: Dict[str, Dict[str, AffineModZ]] = {}
        for entry in raw["generators"]:
            gen_name = entry["name"]
            generators[gen_name] = parse_matrix(entry["matrix"])
            if entry.get("order"):
                orders[gen_name] = int(entry["order"])
            homology[gen_name] = tuple(entry.get("homology", (0, 0)))
            if "symbol" in entry:
                symbols[gen_name] = Fraction(entry["symbol"])
            for cusp, value in entry.get("star", {}).items():
                star.setdefault(cusp, {})[gen_name] = _star_value(value)

        group_raw = raw["group"]
        group = GroupData(
            genus=group_raw["genus"],
            cusps=group_raw["cusps"],
            elliptic_orders=tuple(group_raw.get("elliptic_orders", ())),
            volume=_volume(membership, level),
        )
        x0, y0 = (Fraction(part) for part in raw.get("base_point", ("1/2", "6/5")))
        pair = raw.get("homology_pair")
        preset = GroupPreset(
            name=name,
            description=raw.get("description", ""),
            membership=membership,
            level=level,
            generators=generators,
            group=group,
            orders=orders,
            homology=homology,
            homology_pair=tuple(pair) if pair else None,
            symbols=symbols,
            star=star,
            kappa=Fraction(raw["kappa"]) if "kappa" in raw else None,
            base_point=(x0, y0),
        )
        negation = parse_word(preset, raw.get("negation", "")).letters
        relations = tuple(
            (parse_word(preset, rel["word"]).letters, parse_matrix(rel["equals"])) for rel in raw.get("relations", ())
        )
        preset = replace(preset, negation=negation, relations=relations)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, PresetError):
            raise
        raise PresetError(f"malformed preset {raw.get('name', '?') if isinstance(raw, dict) else '?'}: {exc}") from None

    validate_preset(preset)
    return preset


def validate_preset(preset: GroupPreset) -> None:
    name = preset.name
    if not preset.group.gauss_bonnet_ok():
        raise PresetError(
            f"preset {name}: volume {preset.group.volume} pi does not match signature {preset.group}"
        )
    for gen_name, M in preset.generators.items():
        if not preset.contains(M):
            raise PresetError(f"preset {name}: generator {gen_name} = {M} is outside the group")
    for letters, expected in preset.relations:
        value = eval_word(preset, preset.word(letters))
        if value != expected:
            raise PresetError(f"preset {name}: relation {preset.word(letters)} gives {value}, expected {expected}")
    if eval_word(preset, preset.word(preset.negation)) != -IDENTITY:
        raise PresetError(f"preset {name}: negation word does not evaluate to -I")
    for gen_name, order in preset.orders.items():
        if mat_pow(preset.generators[gen_name], order) != IDENTITY:
            raise PresetError(f"preset {name}: {gen_name}^{order} != I")
    for gen_name, expected in preset.symbols.items():
        value = exact_symbol(preset, preset.generators[gen_name])
        if value != expected:
            raise PresetError(f"preset {name}: S({gen_name}) = {value}, table says {expected}")
    if preset.star:
        if preset.kappa is None or preset.homology_pair is None:
            raise PresetError(f"preset {name}: higher-order tables need kappa and a homology pair")
        for cusp, table in preset.star.items():
            missing = set(preset.generators) - set(table)
            if missing:
                raise PresetError(f"preset {name}: cusp {cusp} table lacks {sorted(missing)}")
            for gen_name, order in preset.orders.items():
                elliptic = ModZ(S_elliptic(preset.generators[gen_name], order))
                if table[gen_name] != elliptic:
                    raise PresetError(f"preset {name}: S*({gen_name}) at {cusp} is not the elliptic value {elliptic}")
    logger.debug("preset %s validated", name)


def load_preset_file(path: Union[str, Path]) -> GroupPreset:
    path = Path(path)
    try:
        with open(path, "r") as f:
            raw = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise PresetError(f"cannot read preset file {path}: {exc}") from None
    return build_preset(raw)


@lru_cache(maxsize=1)
def load_presets() -> Dict[str, GroupPreset]:
    """All shipped presets by name"""
    presets = {}
    for path in sorted(PRESET_DIR.glob("*.json")):
        preset = load_preset_file(path)
        presets[preset.name] = preset
    return presets


def get_preset(name: str) -> GroupPreset:
    presets = load_presets()
    if name not in presets:
        raise DedekindError(f"unknown preset {name!r}; available: {', '.join(sorted(presets))}")
    return presets[name]
