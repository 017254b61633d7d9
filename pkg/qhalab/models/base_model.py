from pydantic import BaseModel, ConfigDict


class BaseValue(BaseModel):
    """Immutable value object; array fields are frozen numpy arrays."""

    model_config = ConfigDict(
        frozen=True,
        populate_by_name=True,
        arbitrary_types_allowed=True,
        validate_default=True,
    )
