"""
jsonable_encoder converts a result object to JSON-friendly data
(Fractions to "p/q" strings, pydantic models and dataclasses to dicts,
sets to sorted lists).

Output is deterministic: set-like containers are sorted, dicts keep their
insertion order.
"""

import dataclasses
from enum import Enum
from fractions import Fraction
from pathlib import PurePath
from typing import Any, Callable, Dict, List, Optional

import pydantic

from .rationals import format_rational


def _sort_key(item: Any) -> Any:
    if isinstance(item, (list, tuple)):
        return (len(item), [_sort_key(x) for x in item])
    if isinstance(item, Fraction):
        return (0, item)
    return item


def jsonable_encoder(obj: Any, custom_encoder: Optional[Dict[Any, Callable[[Any], Any]]] = None) -> Any:
    custom_encoder = custom_encoder or {}
    if custom_encoder:
        if type(obj) in custom_encoder:
            return custom_encoder[type(obj)](obj)
        else:
            for encoder_type, encoder_instance in custom_encoder.items():
                if isinstance(obj, encoder_type):
                    return encoder_instance(obj)
    if isinstance(obj, pydantic.BaseModel):
        obj_dict = obj.model_dump(by_alias=True, mode="json")
        if "root" in obj_dict:
            obj_dict = obj_dict["root"]
        return jsonable_encoder(obj_dict, custom_encoder=custom_encoder)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        obj_dict = {f.name: getattr(obj, f.name) for f in dataclasses.fields(obj) if f.repr}
        return jsonable_encoder(obj_dict, custom_encoder=custom_encoder)
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, PurePath):
        return str(obj)
    if isinstance(obj, (str, int, type(None))):
        return obj
    if isinstance(obj, float):
        raise TypeError("Floating point values have no place in an exact report")
    if isinstance(obj, dict):
        encoded_dict = {}
        for key, value in obj.items():
            encoded_key = jsonable_encoder(key, custom_encoder=custom_encoder)
            if isinstance(encoded_key, list):
                encoded_key = ",".join(str(k) for k in encoded_key)
            encoded_dict[encoded_key] = jsonable_encoder(value, custom_encoder=custom_encoder)
        return encoded_dict
    if isinstance(obj, (set, frozenset)):
        encoded_items = [jsonable_encoder(item, custom_encoder=custom_encoder) for item in obj]
        return sorted(encoded_items, key=_sort_key)
    if isinstance(obj, (list, tuple)) or hasattr(obj, "__iter__"):
        encoded_list: List[Any] = []
        for item in obj:
            encoded_list.append(jsonable_encoder(item, custom_encoder=custom_encoder))
        return encoded_list
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON encodable")
