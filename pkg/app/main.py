import logging

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import RedirectResponse

from .artin import normal_form, parse_word, words_equal
from .config import configure_logging, get_settings
from .coxeter import graph_from_spec
from .errors import ArtinToolkitError
from .models import (
    CheckRequest,
    ClearCacheRequest,
    GraphRequest,
    TheoremId,
    WordPairRequest,
    WordRequest,
)
from .surface import curve_graph_from_coxeter, surface_of
from .verifier import RelationVerifier

logger = logging.getLogger(__name__)

settings = get_settings()
configure_logging(settings.log_level)

app = FastAPI(
    title="Artin Relations Toolkit",
    description="Decide Artin relations between Dehn twists of curve chains and verify their periods",
    version="1.0.0"
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

verifier = RelationVerifier(settings)


@app.get("/")
async def root():
    """Redirect to API documentation"""
    return RedirectResponse(url="/docs")


@app.post("/check/{theorem}")
async def check(theorem: TheoremId, request: CheckRequest):
    """
    Run the verdict table of one theorem.

    - **k**: chain parameter
    - **n_max**: largest relation length checked (defaults to three periods)

    Returns one row per length with the decided truth value, the predicted
    one and the matrix / oracle cross-checks.
    """
    try:
        if theorem == TheoremId.EVEN_CHAIN:
            report = verifier.check_even_chain(request.k, request.n_max,
                                               allow_degenerate=request.allow_degenerate)
        elif theorem == TheoremId.ODD_CHAIN:
            report = verifier.check_odd_chain(request.k, request.n_max)
        elif theorem in (TheoremId.FOLD_A, TheoremId.FOLD_D):
            report = verifier.check_fold(theorem.value[-1], request.k, request.n_max)
        elif theorem == TheoremId.CONJECTURE:
            report = verifier.check_conjecture(request.k, request.n_max,
                                               allow_unverified=request.allow_unverified)
        elif theorem == TheoremId.COROLLARY:
            report = verifier.check_corollary()
        else:
            parity = "even" if theorem == TheoremId.CLAIMS_EVEN else "odd"
            report = verifier.check_claims(parity, request.k)
        return report.model_dump(mode="json")
    except ArtinToolkitError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.exception("Check %s failed", theorem.value)
        raise HTTPException(status_code=500, detail=f"Check failed: {str(e)}")


@app.post("/surface")
async def surface(request: GraphRequest):
    """Genus, boundary count and Euler characteristic of the curves' neighborhood."""
    try:
        g = graph_from_spec(request.graph)
        result = surface_of(curve_graph_from_coxeter(g))
        return {"graph": g.to_spec(), **result.model_dump()}
    except ArtinToolkitError as e:
        raise HTTPException(status_code=400, detail=str(e))


@app.post("/normal_form")
async def normal_form_endpoint(request: WordRequest):
    try:
        g = graph_from_spec(request.graph)
        form = normal_form(parse_word(g, request.word))
        return {
            "graph": g.name,
            "infimum": form.infimum,
            "factors": [list(f) for f in form.factor_words()],
        }
    except ArtinToolkitError as e:
        raise HTTPException(status_code=400, detail=str(e))


@app.post("/words_equal")
async def words_equal_endpoint(request: WordPairRequest):
    try:
        g = graph_from_spec(request.graph)
        return {"equal": words_equal(parse_word(g, request.u), parse_word(g, request.v))}
    except ArtinToolkitError as e:
        raise HTTPException(status_code=400, detail=str(e))


@app.post("/clear_cache/")
async def clear_cache(request: ClearCacheRequest):
    """Drop every memoised verdict table. Requires admin password."""
    admin_password = get_settings().admin_password

    if not admin_password:
        raise HTTPException(status_code=500, detail="Admin password not configured")

    if request.password != admin_password:
        raise HTTPException(status_code=401, detail="Invalid password")

    success = verifier.clear_all_cache()
    if success:
        return {"message": "All cached verdicts cleared!"}
    else:
        raise HTTPException(status_code=500, detail="Failed to clear cache")


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host="0.0.0.0", port=8000)
