from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator


class TheoremId(str, Enum):
    EVEN_CHAIN = "even-chain"
    ODD_CHAIN = "odd-chain"
    FOLD_A = "fold-A"
    FOLD_D = "fold-D"
    CONJECTURE = "conjecture"
    COROLLARY = "corollary"
    CLAIMS_EVEN = "claims-even"
    CLAIMS_ODD = "claims-odd"


def expected_period(theorem: TheoremId, k: int) -> int:
    """Length of the shortest Artin relation each theorem predicts."""
    if theorem in (TheoremId.EVEN_CHAIN, TheoremId.CONJECTURE, TheoremId.CLAIMS_EVEN):
        # the degenerate k = 1 chain is two curves meeting once: a braid pair
        return 6 if k == 1 else 2 * k + 4
    if theorem in (TheoremId.ODD_CHAIN, TheoremId.CLAIMS_ODD):
        return 2 * k + 1
    if theorem == TheoremId.FOLD_A:
        return k
    if theorem == TheoremId.FOLD_D:
        return 2 * k - 2
    return 6


class TheoremConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    theorem: TheoremId
    k: int
    n_max: int
    period: int

    @model_validator(mode="before")
    @classmethod
    def _default_window(cls, data):
        # default window is three periods
        if isinstance(data, dict) and data.get("theorem") is not None and data.get("k") is not None:
            data = dict(data)
            if data.get("period") is None:
                data["period"] = expected_period(TheoremId(data["theorem"]), data["k"])
            if data.get("n_max") is None:
                data["n_max"] = 3 * data["period"]
        return data

    @model_validator(mode="after")
    def _check_window(self):
        if self.n_max < 2 * self.period:
            raise ValueError(
                f"n_max={self.n_max} must be at least twice the period {self.period} "
                "to witness both holding and failing residues"
            )
        return self


class VerdictRow(BaseModel):
    n: int
    relation_holds: bool
    expected: bool
    agree: bool
    matrix_separated: Optional[bool] = None
    oracle: Optional[str] = None


class LcmHomReport(BaseModel):
    source: dict
    h: int
    x: str
    y: str
    relation_at_h: bool
    divisibility: bool
    first_shorter_relation: Optional[int] = None
    respects_lcm: bool
    oracle: Optional[str] = None
    passed: bool


class VerdictTable(BaseModel):
    theorem: TheoremId
    k: int
    period: int
    graph: dict
    x: str
    y: str
    index_map: Dict[str, int]
    rows: List[VerdictRow]
    all_agree: bool
    periodicity_consistent: bool
    cross_check_failures: List[str] = Field(default_factory=list)
    wall_time: float
    sigma: Optional[List[int]] = None
    lcm_report: Optional[LcmHomReport] = None

    @computed_field
    @property
    def passed(self) -> bool:
        lcm_ok = self.lcm_report is None or self.lcm_report.passed
        return self.all_agree and not self.cross_check_failures and lcm_ok


class ClaimRow(BaseModel):
    claim: str
    index: int
    length: int
    relation_holds: bool
    reduced_holds: bool
    agree: bool
    reduced_equation: str


class ClaimsReport(BaseModel):
    parity: str
    k: int
    index_map: Dict[str, int]
    base_rows: List[ClaimRow] = Field(default_factory=list)
    rows: List[ClaimRow]
    all_agree: bool

    @computed_field
    @property
    def passed(self) -> bool:
        return self.all_agree


class ConjectureReport(BaseModel):
    k: int
    period: int
    within_verified_range: bool
    permutations_checked: int
    tables: List[VerdictTable]
    all_pass: bool

    @computed_field
    @property
    def passed(self) -> bool:
        return self.all_pass


class CorollaryReport(BaseModel):
    index_map: Dict[str, str]
    relation_length_6: bool
    shorter_relations: Dict[int, bool]
    d4_relation: bool
    capped_images_match: bool
    passed: bool


# ---------------------------------------------------------------------------
# HTTP requests


# Upper limits on HTTP checks; the CLI is unbounded.
MAX_REQUEST_K = 6
MAX_REQUEST_N = 128


class CheckRequest(BaseModel):
    k: int = Field(default=2, le=MAX_REQUEST_K)
    n_max: Optional[int] = Field(default=None, le=MAX_REQUEST_N)
    allow_degenerate: bool = False
    allow_unverified: bool = False


class GraphRequest(BaseModel):
    graph: dict


class WordRequest(BaseModel):
    graph: dict
    word: str


class WordPairRequest(BaseModel):
    graph: dict
    u: str
    v: str


class ClearCacheRequest(BaseModel):
    password: str
