import typing as t

import numpy as np
from pydantic import GetCoreSchemaHandler, GetJsonSchemaHandler
from pydantic.json_schema import JsonSchemaValue
from pydantic_core import CoreSchema, core_schema
from pydantic_core.core_schema import ValidationInfo

__all__ = ("ComplexArray",)


class _NDArray:
    """numpy array field for pydantic models.

    Values are copied, cast to ``dtype``, checked finite and frozen
    (``writeable = False``) so models holding them stay immutable. In JSON an
    array is a nested list; complex entries are ``[re, im]`` pairs.
    """

    dtype: t.ClassVar[type] = np.float64

    @classmethod
    def validate(cls, v: t.Any, _: ValidationInfo | None = None) -> np.ndarray:
        try:
            array = np.array(v, dtype=cls.dtype, copy=True)
        except (TypeError, ValueError) as e:
            raise ValueError(f"not convertible to {np.dtype(cls.dtype).name}: {e}")
        if not np.all(np.isfinite(array)):
            raise ValueError("array entries must be finite")
        array.setflags(write=False)
        return array

    @classmethod
    def from_json(cls, v: t.Any) -> np.ndarray:
        return cls.validate(v)

    @classmethod
    def serialize(cls, array: np.ndarray) -> list:
        return np.asarray(array).tolist()

    @classmethod
    def __get_pydantic_core_schema__(
        cls, source_type: t.Any, handler: GetCoreSchemaHandler
    ) -> CoreSchema:
        return core_schema.json_or_python_schema(
            python_schema=core_schema.with_info_plain_validator_function(cls.validate),
            json_schema=core_schema.no_info_plain_validator_function(cls.from_json),
            serialization=core_schema.plain_serializer_function_ser_schema(
                cls.serialize
            ),
        )

    @classmethod
    def __get_pydantic_json_schema__(
        cls,
        schema: core_schema.CoreSchema,
        handler: GetJsonSchemaHandler,
    ) -> JsonSchemaValue:
        return {"type": "array", "items": {}, "description": np.dtype(cls.dtype).name}


class ComplexArray(_NDArray):
    dtype = np.complex128

    @classmethod
    def from_json(cls, v: t.Any) -> np.ndarray:
        pairs = np.asarray(v, dtype=np.float64)
        if pairs.ndim == 0 or pairs.shape[-1] != 2:
            raise ValueError("complex arrays are encoded as [re, im] pairs")
        return cls.validate(pairs[..., 0] + 1j * pairs[..., 1])

    @classmethod
    def serialize(cls, array: np.ndarray) -> list:
        array = np.asarray(array)
        return np.stack([array.real, array.imag], axis=-1).tolist()
