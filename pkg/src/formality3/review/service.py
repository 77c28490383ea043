"""HTTP surface for the review queue.

Endpoints:
  GET  /queue/next?annotator=ID       next undecided item (or null when done)
  GET  /items/{id}                    item state
  POST /items/{id}/decision           {annotator, verdict, to_level?, edited_text?}
  POST /items/{id}/resolve            manual escalation resolution
  POST /enqueue                       {path} or inline {triples: [...]}
  GET  /reports/agreement             Fleiss' kappa per task + counts
  GET  /export?status=accepted        accepted variants with revised texts

Status codes: 200 success, 404 unknown item/annotator, 409 duplicate or
conflicting decision, 422 malformed verdict.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from formality3.pipeline import read_triples
from formality3.review.store import ReviewError, ReviewStore


class DecisionBody(BaseModel):
    annotator: str
    verdict: str
    to_level: int | None = None
    edited_text: str | None = None


class ResolveBody(BaseModel):
    verdict: str
    to_level: int | None = None


class EnqueueBody(BaseModel):
    path: str | None = None
    triples: list[dict] | None = None


def create_app(store: ReviewStore) -> FastAPI:
    app = FastAPI(title="formality3 review service")

    @app.exception_handler(ReviewError)
    async def _review_error(_, exc: ReviewError):
        return JSONResponse(status_code=exc.status, content={"detail": str(exc)})

    @app.get("/queue/next")
    def queue_next(annotator: str):
        item = store.next_item(annotator)
        progress = store.progress(annotator)
        return {"item": item.to_payload() if item else None, "progress": progress}

    @app.get("/items/{item_id}")
    def get_item(item_id: str):
        return store.get(item_id).to_payload()

    @app.post("/items/{item_id}/decision")
    def post_decision(item_id: str, body: DecisionBody):
        item = store.submit_decision(
            item_id, annotator=body.annotator, verdict=body.verdict,
            to_level=body.to_level, edited_text=body.edited_text)
        return item.to_payload()

    @app.post("/items/{item_id}/resolve")
    def post_resolve(item_id: str, body: ResolveBody):
        item = store.resolve(item_id, verdict=body.verdict, to_level=body.to_level)
        return item.to_payload()

    @app.post("/enqueue")
    def post_enqueue(body: EnqueueBody):
        from formality3.pipeline import StyleTriple

        if body.path:
            if not Path(body.path).is_file():
                raise ReviewError(f"dataset file {body.path!r} not found", status=404)
            triples = read_triples(body.path)
        elif body.triples is not None:
            triples = [StyleTriple.from_row(row) for row in body.triples]
        else:
            raise ReviewError("enqueue needs a dataset file path or inline triples",
                              status=422)
        queued = store.enqueue_triples(triples)
        return {"queued": queued, "progress": store.progress()}

    @app.get("/reports/agreement")
    def agreement():
        return store.agreement_report()

    @app.get("/export")
    def export(status: str = "accepted"):
        return {"records": store.export(status=status)}

    return app
