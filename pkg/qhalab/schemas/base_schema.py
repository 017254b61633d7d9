from pydantic import BaseModel, ConfigDict


class BaseSchema(BaseModel):
    model_config = ConfigDict(
        populate_by_name=True,
        from_attributes=True,
        validate_default=True,
    )


class BaseReport(BaseSchema):
    """Serializable result of a computation; field order is the JSON order."""

    model_config = ConfigDict(
        populate_by_name=True,
        from_attributes=True,
        validate_default=True,
        extra="forbid",
    )
