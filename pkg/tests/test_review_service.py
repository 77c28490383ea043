import pytest
from fastapi.testclient import TestClient

from helpers import pairwise_kappa_oracle

from formality3.gateway import StubGateway
from formality3.pipeline import build_triple
from formality3.review.service import create_app
from formality3.review.store import ReviewStore

ANNOTATORS = ("a1", "a2", "a3")


def make_triples(lexicons, n=2):
    stub = StubGateway(lexicons=lexicons)
    anchors = [
        "Hey, I'm not sure the report was right.",
        "Hi, you're quite sure the answer needs more info.",
        "That's a fine plan, I can't wait.",
        "I'm pretty sure the meeting should happen soon.",
    ]
    return [build_triple(anchors[i], stub, lexicons, triple_id=f"rv{i:03d}")
            for i in range(n)]


@pytest.fixture
def store(lexicons, tmp_path):
    return ReviewStore(lexicons, annotators=ANNOTATORS,
                       event_log=tmp_path / "events.jsonl")


@pytest.fixture
def client(store):
    return TestClient(create_app(store))


class TestEnqueue:
    def test_one_item_per_variant(self, store, lexicons):
        assert store.enqueue_triples(make_triples(lexicons, 2)) == 6
        assert len(store.items()) == 6

    def test_idempotent(self, store, lexicons):
        triples = make_triples(lexicons, 2)
        store.enqueue_triples(triples)
        assert store.enqueue_triples(triples) == 0
        assert len(store.items()) == 6

    def test_empty(self, store):
        assert store.enqueue_triples([]) == 0

    def test_items_carry_label_and_evidence(self, store, lexicons):
        store.enqueue_triples(make_triples(lexicons, 1))
        by_variant = {i.variant: i for i in store.items()}
        assert by_variant["anchor"].proposed_label == 1
        assert by_variant["formal"].proposed_label == 2
        assert by_variant["informal"].proposed_label == 0
        assert any(e["kind"] == "contraction"
                   for e in by_variant["anchor"].evidence)


class TestQueue:
    def test_fresh_queue_serves_item(self, store, lexicons):
        store.enqueue_triples(make_triples(lexicons, 1))
        item = store.next_item("a1")
        assert item is not None

    def test_none_after_deciding_everything(self, store, lexicons):
        store.enqueue_triples(make_triples(lexicons, 1))
        while (item := store.next_item("a1")) is not None:
            store.submit_decision(item.id, "a1", "accept")
        assert store.next_item("a1") is None

    def test_most_decided_first(self, store, lexicons):
        store.enqueue_triples(make_triples(lexicons, 1))
        items = store.items()
        hot = items[1]
        store.submit_decision(hot.id, "a1", "accept")
        store.submit_decision(hot.id, "a2", "accept")
        assert store.next_item("a3").id == hot.id

    def test_unknown_annotator(self, store):
        from formality3.review.store import ReviewError

        with pytest.raises(ReviewError) as err:
            store.next_item("stranger")
        assert err.value.status == 404


class TestDecisions:
    def test_majority_accept(self, store, lexicons):
        store.enqueue_triples(make_triples(lexicons, 1))
        item = store.items()[0]
        store.submit_decision(item.id, "a1", "accept")
        store.submit_decision(item.id, "a2", "accept")
        updated = store.submit_decision(item.id, "a3", "relabel", to_level=1)
        assert updated.final == "accept"
        assert not updated.escalated

    def test_three_way_split_escalates(self, store, lexicons):
        store.enqueue_triples(make_triples(lexicons, 1))
        item = store.items()[0]
        store.submit_decision(item.id, "a1", "accept")
        store.submit_decision(item.id, "a2", "relabel", to_level=1)
        updated = store.submit_decision(item.id, "a3", "relabel", to_level=0)
        assert updated.escalated
        assert updated.final is None

    def test_duplicate_decision_conflicts(self, store, lexicons):
        from formality3.review.store import ReviewError

        store.enqueue_triples(make_triples(lexicons, 1))
        item = store.items()[0]
        store.submit_decision(item.id, "a1", "accept")
        with pytest.raises(ReviewError) as err:
            store.submit_decision(item.id, "a1", "accept")
        assert err.value.status == 409

    def test_revise_resets_and_recomputes(self, store, lexicons):
        store.enqueue_triples(make_triples(lexicons, 1))
        item = next(i for i in store.items() if i.variant == "formal")
        store.submit_decision(item.id, "a1", "accept")
        updated = store.submit_decision(
            item.id, "a1", "revise",
            edited_text="It appears that everything was resolved.")
        assert updated.decisions == []
        assert updated.revised
        assert updated.proposed_label == 2
        kinds = {e["kind"] for e in updated.evidence}
        assert "hedging" in kinds and "passive_voice" in kinds
        # the reviser can decide again after the reset
        store.submit_decision(item.id, "a1", "accept")

    def test_resolve_escalation(self, store, lexicons):
        store.enqueue_triples(make_triples(lexicons, 1))
        item = store.items()[0]
        store.submit_decision(item.id, "a1", "accept")
        store.submit_decision(item.id, "a2", "relabel", to_level=1)
        store.submit_decision(item.id, "a3", "relabel", to_level=0)
        resolved = store.resolve(item.id, "relabel", to_level=1)
        assert resolved.final == "relabel:1"
        assert not resolved.escalated


class TestEventReplay:
    def test_snapshot_roundtrip(self, store, lexicons, tmp_path):
        import json

        store.enqueue_triples(make_triples(lexicons, 1))
        item = store.items()[0]
        store.submit_decision(item.id, "a1", "accept")
        path = tmp_path / "snapshot.json"
        store.save_snapshot(path)
        payload = json.loads(path.read_text())
        assert [i["id"] for i in payload["items"]] == \
            [i.id for i in store.items()]
        assert payload["items"][0]["decision_count"] == 1

    def test_replay_equals_live_state(self, lexicons, tmp_path):
        log = tmp_path / "events.jsonl"
        live = ReviewStore(lexicons, annotators=ANNOTATORS, event_log=log)
        live.enqueue_triples(make_triples(lexicons, 2))
        items = live.items()
        live.submit_decision(items[0].id, "a1", "accept")
        live.submit_decision(items[0].id, "a2", "accept")
        live.submit_decision(items[0].id, "a3", "accept")
        live.submit_decision(items[1].id, "a1", "revise",
                             edited_text="idk lol whatever")
        live.submit_decision(items[2].id, "a1", "relabel", to_level=2)

        rebuilt = ReviewStore(lexicons, annotators=ANNOTATORS, event_log=log)
        assert [i.to_payload() for i in rebuilt.items()] == \
            [i.to_payload() for i in live.items()]


class TestHttpSurface:
    def test_full_flow(self, client, store, lexicons):
        triples = make_triples(lexicons, 2)
        resp = client.post("/enqueue",
                           json={"triples": [t.to_row() for t in triples]})
        assert resp.status_code == 200
        assert resp.json()["queued"] == 6

        resp = client.get("/queue/next", params={"annotator": "a1"})
        assert resp.status_code == 200
        item = resp.json()["item"]
        assert item is not None

        resp = client.post(f"/items/{item['id']}/decision",
                           json={"annotator": "a1", "verdict": "accept"})
        assert resp.status_code == 200
        assert resp.json()["decision_count"] == 1

        resp = client.get(f"/items/{item['id']}")
        assert resp.status_code == 200
        assert resp.json()["decision_count"] == 1

    def test_enqueue_from_file(self, client, store, lexicons, tmp_path):
        from formality3.pipeline import write_triples

        path = tmp_path / "triples.jsonl"
        write_triples(make_triples(lexicons, 1), path)
        resp = client.post("/enqueue", json={"path": str(path)})
        assert resp.status_code == 200
        assert resp.json()["queued"] == 3

    def test_status_codes(self, client, store, lexicons):
        client.post("/enqueue", json={
            "triples": [t.to_row() for t in make_triples(lexicons, 1)]})
        item_id = store.items()[0].id

        assert client.get("/items/ghost").status_code == 404
        assert client.get("/queue/next",
                          params={"annotator": "ghost"}).status_code == 404

        ok = client.post(f"/items/{item_id}/decision",
                         json={"annotator": "a1", "verdict": "accept"})
        assert ok.status_code == 200
        dup = client.post(f"/items/{item_id}/decision",
                          json={"annotator": "a1", "verdict": "accept"})
        assert dup.status_code == 409

        bad = client.post(f"/items/{item_id}/decision",
                          json={"annotator": "a2", "verdict": "frobnicate"})
        assert bad.status_code == 422
        bad = client.post(f"/items/{item_id}/decision",
                          json={"annotator": "a2", "verdict": "relabel"})
        assert bad.status_code == 422
        bad = client.post(f"/items/{item_id}/decision",
                          json={"annotator": "a2", "verdict": "revise",
                                "edited_text": "  "})
        assert bad.status_code == 422

    def test_export_returns_accepted_with_revised_texts(self, client, store,
                                                        lexicons):
        client.post("/enqueue", json={
            "triples": [t.to_row() for t in make_triples(lexicons, 2)]})
        items = store.items()
        accepted, rejected = items[0], items[1]
        revised_text = "It appears that the schedule was confirmed."

        client.post(f"/items/{accepted.id}/decision",
                    json={"annotator": "a1", "verdict": "revise",
                          "edited_text": revised_text})
        for annotator in ANNOTATORS:
            client.post(f"/items/{accepted.id}/decision",
                        json={"annotator": annotator, "verdict": "accept"})
        for annotator in ANNOTATORS:
            client.post(f"/items/{rejected.id}/decision",
                        json={"annotator": annotator, "verdict": "relabel",
                              "to_level": 1})

        resp = client.get("/export", params={"status": "accepted"})
        records = resp.json()["records"]
        assert [r["id"] for r in records] == [accepted.id]
        assert records[0]["text"] == revised_text

    def test_agreement_endpoint_matches_oracle(self, client, store, lexicons):
        client.post("/enqueue", json={
            "triples": [t.to_row() for t in make_triples(lexicons, 2)]})
        items = store.items()
        plan = [
            ("accept", "accept", "accept"),
            ("accept", "accept", "relabel:1"),
            ("relabel:1", "relabel:1", "relabel:1"),
            ("accept", "relabel:2", "relabel:2"),
            ("accept", "accept", "accept"),
            ("relabel:0", "relabel:0", "accept"),
        ]
        for item, verdicts in zip(items, plan):
            for annotator, verdict in zip(ANNOTATORS, verdicts):
                if verdict == "accept":
                    body = {"annotator": annotator, "verdict": "accept"}
                else:
                    body = {"annotator": annotator, "verdict": "relabel",
                            "to_level": int(verdict.split(":")[1])}
                assert client.post(f"/items/{item.id}/decision",
                                   json=body).status_code == 200

        resp = client.get("/reports/agreement")
        report = resp.json()
        assert report["items_complete"] == 6
        expected = pairwise_kappa_oracle([list(v) for v in plan])
        assert report["overall"]["kappa"] == pytest.approx(expected, abs=1e-9)

    def test_agreement_undefined_when_single_category(self, client, store,
                                                      lexicons):
        client.post("/enqueue", json={
            "triples": [t.to_row() for t in make_triples(lexicons, 1)]})
        for item in store.items():
            for annotator in ANNOTATORS:
                client.post(f"/items/{item.id}/decision",
                            json={"annotator": annotator, "verdict": "accept"})
        report = client.get("/reports/agreement").json()
        assert report["overall"]["kappa"] is None
        assert "undefined_reason" in report["overall"]
