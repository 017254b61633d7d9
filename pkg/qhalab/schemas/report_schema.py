import typing as t

from pydantic import Field, model_validator

from .base_schema import BaseReport


class SchattenReport(BaseReport):
    N: int
    singular_values: t.List[float] = Field(description="descending, nonnegative")
    norms: t.Dict[str, float] = Field(
        default_factory=dict, examples=[{"1": 3.0, "2": 1.7320508075688772, "inf": 1.0}]
    )

    @model_validator(mode="after")
    def _descending(self) -> "SchattenReport":
        s = self.singular_values
        if any(v < 0 for v in s) or any(a < b for a, b in zip(s, s[1:])):
            raise ValueError("singular values must be nonnegative and descending")
        return self


class PointSchema(BaseReport):
    x: int
    omega: int


class RegularityReport(BaseReport):
    """Zero set, translate span and kernel data of an operator S.

    In the finite model every notion of p-regularity (p = 1, 2, inf; norm,
    weak* or measure-zero variants) reduces to "the zero set of F_W S is
    empty". The zero set and all three ranks share the relative threshold
    ``tol``, so translate_rank = rank A_S = rank B_S = N^2 - len(zero_set).
    """

    N: int
    tol: float
    zero_set: t.List[PointSchema]
    support_size: int
    translate_rank: int
    kernel_dim_A: int
    kernel_dim_B: int
    range_rank_A: int
    range_rank_B: int
    regular: bool
    degenerate: bool = False
    arveson_support: t.List[PointSchema]
    square_zero_set_agrees: bool = True
    ambiguity_zero_set_agrees: t.Optional[bool] = None

    @model_validator(mode="after")
    def _counts(self) -> "RegularityReport":
        size = self.N * self.N
        if self.support_size + len(self.zero_set) != size:
            raise ValueError("support_size + |zero_set| must equal N^2")
        if self.regular != (len(self.zero_set) == 0):
            raise ValueError("regular must be equivalent to an empty zero set")
        ranks = (self.translate_rank, self.range_rank_A, self.range_rank_B)
        if any(rank != self.support_size for rank in ranks):
            raise ValueError("translate_rank, rank A and rank B must all equal support_size")
        kernels = (size - self.range_rank_A, size - self.range_rank_B)
        if kernels != (self.kernel_dim_A, self.kernel_dim_B):
            raise ValueError("kernel and range dimensions must add up to N^2")
        return self


CheckStatus = t.Literal["pass", "fail", "report-only"]


class CheckResult(BaseReport):
    name: str
    status: CheckStatus
    measured: float
    threshold: t.Optional[float] = None
    runtime: float = Field(default=0.0, exclude=True, description="seconds; not serialized")
    detail: t.Dict[str, t.Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _status(self) -> "CheckResult":
        if self.status != "report-only":
            if self.threshold is None:
                raise ValueError("thresholded checks need a threshold")
            if (self.status == "pass") != (self.measured <= self.threshold):
                raise ValueError("status=pass must be equivalent to measured <= threshold")
        return self

    @classmethod
    def thresholded(
        cls, name: str, measured: float, threshold: float, **kwargs: t.Any
    ) -> "CheckResult":
        status = "pass" if measured <= threshold else "fail"
        return cls(name=name, status=status, measured=measured, threshold=threshold, **kwargs)

    @classmethod
    def report_only(cls, name: str, measured: float, **kwargs: t.Any) -> "CheckResult":
        return cls(name=name, status="report-only", measured=measured, **kwargs)


class CheckSummary(BaseReport):
    command: str
    seed: int
    results: t.List[CheckResult]

    @property
    def failed(self) -> t.List[CheckResult]:
        return [r for r in self.results if r.status == "fail"]


class LocalizationReport(BaseReport):
    N: int
    schatten: SchattenReport
    convolution_residual: float = Field(
        description="max |A_f - f * (phi2 (x) phi1)| over the entries"
    )
    twisted_symbol_residual: float
    bound_ratios: t.Dict[str, float] = Field(
        default_factory=dict,
        description="||A_f||_p / (||f||_p ||phi1|| ||phi2||) per p; at most one",
    )


class BerezinReport(BaseReport):
    N: int
    convolution_residual: float
    bound_ratios: t.Dict[str, float] = Field(default_factory=dict)


class SpectrumReport(BaseReport):
    N: int
    tol: float
    support: t.List[PointSchema]
    size: int

    @model_validator(mode="after")
    def _size(self) -> "SpectrumReport":
        if self.size != len(self.support):
            raise ValueError("size must equal the number of support points")
        return self
