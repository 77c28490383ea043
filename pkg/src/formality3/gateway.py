"""Chat-completion client for the rewriting / labeling / judging prompts.

Two gateways share one interface: HttpGateway talks to an OpenAI-style
chat-completions endpoint (temperature pinned to 0, bounded retries with
backoff on transport/5xx failures, never on 4xx); StubGateway answers
offline from scripted responses and/or a deterministic rule-based rewriter,
so the entire pipeline and test suite run with zero network access.

Every call is appended to a structured log (template id, bindings,
response, attempts, latency) that is sufficient to replay a full run
offline via StubGateway.from_call_log.
"""

from __future__ import annotations

import json
import re
import threading
import time
from dataclasses import dataclass
from importlib.resources import files
from pathlib import Path
from typing import Callable, Mapping

from formality3.classifier import FormalityLabel
from formality3.transfer_eval import JudgeError

TEMPLATE_IDS = (
    "label_3way",
    "rewrite_casual_to_informal",
    "rewrite_casual_to_formal",
    "rewrite_informal_to_formal_naive",
    "judge_binary",
    "judge_fluency",
    "revision_informal",
)

# templates whose wording is frozen; the suite byte-compares these against
# stored reference copies, so edit only with a new reference snapshot
PINNED_TEMPLATES = frozenset({
    "label_3way", "rewrite_casual_to_informal",
    "rewrite_informal_to_formal_naive", "judge_binary", "judge_fluency",
})

_FIRST_INT_RE = re.compile(r"[-+]?\d+")
_PLACEHOLDER_RE = re.compile(r"\{(\w+)\}")


class GatewayError(RuntimeError):
    pass


class ConfigError(GatewayError):
    pass


class TransportError(GatewayError):
    def __init__(self, message: str, retryable: bool = True):
        super().__init__(message)
        self.retryable = retryable


class RewriteError(GatewayError):
    pass


@dataclass(frozen=True)
class PromptTemplate:
    id: str
    system: str
    user: str
    pinned: bool

    @property
    def placeholders(self) -> frozenset[str]:
        return frozenset(_PLACEHOLDER_RE.findall(self.system)) \
            | frozenset(_PLACEHOLDER_RE.findall(self.user))

    def render(self, bindings: Mapping[str, str]) -> tuple[str, str]:
        missing = self.placeholders - set(bindings)
        if missing:
            raise ConfigError(
                f"unbound placeholder(s) {sorted(missing)} for template {self.id!r}")

        def fill(text: str) -> str:
            return _PLACEHOLDER_RE.sub(lambda m: str(bindings[m.group(1)]), text)

        return fill(self.system), fill(self.user)


def _prompt_dir() -> Path:
    return Path(str(files("formality3").joinpath("prompts")))


def load_templates(directory: str | Path | None = None) -> dict[str, PromptTemplate]:
    directory = Path(directory) if directory else _prompt_dir()
    catalog = {}
    for template_id in TEMPLATE_IDS:
        system = (directory / f"{template_id}.system.txt").read_text(encoding="utf-8")
        user = (directory / f"{template_id}.user.txt").read_text(encoding="utf-8")
        catalog[template_id] = PromptTemplate(
            id=template_id, system=system, user=user,
            pinned=template_id in PINNED_TEMPLATES)
    return catalog


@dataclass(frozen=True)
class GatewayConfig:
    endpoint: str = "http://localhost:8800/v1/chat/completions"
    model: str = "gpt-4o"
    temperature: float = 0.0
    max_attempts: int = 3
    backoff: tuple[float, ...] = (0.5, 1.0, 2.0)
    credential_env: str = "FORMALITY3_API_KEY"
    timeout_s: float = 30.0
    max_in_flight: int = 4

    def __post_init__(self):
        if self.temperature != 0.0:
            raise ConfigError("temperature is pinned to 0 for reproducibility")
        if self.max_attempts < 1:
            raise ConfigError("max_attempts must be >= 1")


@dataclass
class CallLogEntry:
    template_id: str
    bindings: dict[str, str]
    response: str
    attempts: int
    latency_s: float


class BaseGateway:
    """Shared judging/rewriting surface over a complete() primitive."""

    max_attempts: int = 3

    def __init__(self):
        self.call_log: list[CallLogEntry] = []
        self._log_lock = threading.Lock()

    def complete(self, template_id: str, **bindings: str) -> str:
        raise NotImplementedError

    def _log(self, entry: CallLogEntry) -> None:
        with self._log_lock:
            self.call_log.append(entry)

    def save_call_log(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for entry in self.call_log:
                fh.write(json.dumps({
                    "template_id": entry.template_id,
                    "bindings": entry.bindings,
                    "response": entry.response,
                    "attempts": entry.attempts,
                    "latency_s": round(entry.latency_s, 6),
                }, ensure_ascii=False) + "\n")

    # judging -----------------------------------------------------------

    def _judge_int(self, template_id: str, sentence: str,
                   valid: range) -> int:
        last = None
        for _ in range(self.max_attempts):
            response = self.complete(template_id, sentence=sentence)
            last = response
            match = _FIRST_INT_RE.search(response)
            if match:
                value = int(match.group())
                if value in valid:
                    return value
        raise JudgeError(
            f"{template_id} response unusable after {self.max_attempts} "
            f"attempt(s): {last!r}")

    def judge_formality_binary(self, sentence: str) -> int:
        """1 = formal, 0 = informal."""
        return self._judge_int("judge_binary", sentence, range(0, 2))

    def judge_formality_3way(self, sentence: str) -> FormalityLabel:
        return FormalityLabel(self._judge_int("label_3way", sentence, range(0, 3)))

    def judge_fluency(self, sentence: str) -> int:
        return self._judge_int("judge_fluency", sentence, range(0, 6))

    # rewriting ---------------------------------------------------------

    _REWRITE_TEMPLATES = frozenset({
        "rewrite_casual_to_informal", "rewrite_casual_to_formal",
        "rewrite_informal_to_formal_naive", "revision_informal",
    })

    def rewrite(self, sentence: str, template_id: str) -> str:
        if template_id not in self._REWRITE_TEMPLATES:
            raise ConfigError(f"{template_id!r} is not a rewrite template")
        for _ in range(self.max_attempts):
            response = self.complete(template_id, sentence=sentence)
            cleaned = _clean_rewrite(response)
            if cleaned:
                return cleaned
        raise RewriteError(
            f"{template_id} returned empty output after {self.max_attempts} attempt(s)")


def _clean_rewrite(response: str) -> str:
    text = " ".join(response.split())
    for open_q, close_q in (('"', '"'), ("'", "'"), ("“", "”")):
        if len(text) >= 2 and text.startswith(open_q) and text.endswith(close_q):
            text = text[1:-1].strip()
    return text


class HttpGateway(BaseGateway):
    """Live client for an OpenAI-style chat-completions endpoint."""

    def __init__(self, config: GatewayConfig | None = None,
                 templates: dict[str, PromptTemplate] | None = None,
                 transport: Callable[[dict], str] | None = None,
                 sleep: Callable[[float], None] = time.sleep):
        super().__init__()
        self.config = config or GatewayConfig()
        self.templates = templates or load_templates()
        self.max_attempts = self.config.max_attempts
        self._sleep = sleep
        self._transport = transport or self._http_send
        self._credential: str | None = None
        self._semaphore = threading.Semaphore(self.config.max_in_flight)

    def _require_credential(self) -> str:
        if self._credential is None:
            import os

            value = os.environ.get(self.config.credential_env)
            if not value:
                raise ConfigError(
                    f"credential environment variable "
                    f"{self.config.credential_env!r} is not set")
            self._credential = value
        return self._credential

    def _http_send(self, payload: dict) -> str:
        import requests

        headers = {"Authorization": f"Bearer {self._require_credential()}"}
        try:
            resp = requests.post(self.config.endpoint, json=payload,
                                 headers=headers, timeout=self.config.timeout_s)
        except requests.RequestException as exc:
            raise TransportError(f"transport failure: {exc}", retryable=True) from exc
        if resp.status_code >= 500:
            raise TransportError(f"server error {resp.status_code}", retryable=True)
        if resp.status_code >= 400:
            raise TransportError(f"client error {resp.status_code}: {resp.text[:200]}",
                                 retryable=False)
        try:
            return resp.json()["choices"][0]["message"]["content"]
        except (KeyError, IndexError, ValueError) as exc:
            raise TransportError(f"malformed response body: {exc}",
                                 retryable=True) from exc

    def complete(self, template_id: str, **bindings: str) -> str:
        try:
            template = self.templates[template_id]
        except KeyError:
            raise ConfigError(f"unknown template {template_id!r}") from None
        self._require_credential()  # fail before any network call
        system, user = template.render(bindings)
        payload = {
            "model": self.config.model,
            "messages": [
                {"role": "system", "content": system},
                {"role": "user", "content": user},
            ],
            "temperature": self.config.temperature,
        }
        start = time.monotonic()
        last: Exception | None = None
        for attempt in range(1, self.config.max_attempts + 1):
            try:
                with self._semaphore:
                    response = self._transport(payload)
            except TransportError as exc:
                last = exc
                if not exc.retryable:
                    raise
                if attempt < self.config.max_attempts:
                    idx = min(attempt - 1, len(self.config.backoff) - 1)
                    if self.config.backoff:
                        self._sleep(self.config.backoff[idx])
                continue
            self._log(CallLogEntry(
                template_id=template_id, bindings=dict(bindings),
                response=response, attempts=attempt,
                latency_s=time.monotonic() - start))
            return response
        raise TransportError(
            f"exhausted {self.config.max_attempts} attempt(s) for "
            f"{template_id}: {last}")


class StubGateway(BaseGateway):
    """Offline gateway.

    ``responses`` maps (template_id, sentence) -> canned response; a list
    value is consumed one element per call (the last element repeats), which
    scripts multi-round revision scenarios deterministically. Anything not
    scripted falls back to the rule-based rewriter/judges when lexicons are
    provided, else raises ConfigError.
    """

    def __init__(self,
                 responses: Mapping[tuple[str, str], str | list[str]] | None = None,
                 lexicons=None,
                 max_attempts: int = 3):
        super().__init__()
        self.max_attempts = max_attempts
        self._scripts: dict[tuple[str, str], list[str]] = {}
        self._static: dict[tuple[str, str], str] = {}
        for key, value in (responses or {}).items():
            if isinstance(value, str):
                self._static[key] = value
            else:
                self._scripts[key] = list(value)
        self._rewriter = RuleRewriter(lexicons) if lexicons is not None else None
        self._lock = threading.Lock()

    @classmethod
    def from_call_log(cls, path: str | Path) -> "StubGateway":
        """Replay gateway built from a saved call log."""
        scripts: dict[tuple[str, str], list[str]] = {}
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                row = json.loads(line)
                key = (row["template_id"], row["bindings"].get("sentence", ""))
                scripts.setdefault(key, []).append(row["response"])
        return cls(responses={k: v for k, v in scripts.items()})

    def complete(self, template_id: str, **bindings: str) -> str:
        if template_id not in TEMPLATE_IDS:
            raise ConfigError(f"unknown template {template_id!r}")
        sentence = bindings.get("sentence", "")
        key = (template_id, sentence)
        start = time.monotonic()
        with self._lock:
            if key in self._scripts:
                queue = self._scripts[key]
                response = queue.pop(0) if len(queue) > 1 else queue[0]
            elif key in self._static:
                response = self._static[key]
            elif self._rewriter is not None:
                response = self._rewriter.respond(template_id, sentence)
            else:
                raise ConfigError(
                    f"stub has no response for {template_id!r} on {sentence!r}")
        self._log(CallLogEntry(
            template_id=template_id, bindings=dict(bindings), response=response,
            attempts=1, latency_s=time.monotonic() - start))
        return response


class RuleRewriter:
    """Deterministic text transforms used as the stub's fallback brain.

    to_formal strips informal/casual markers and wraps the remaining body
    in a hedged frame; to_informal injects netspeak. Both are pure
    functions of the input text, so pipeline runs replay bit-for-bit.
    """

    def __init__(self, lexicons):
        from formality3.classifier import classify
        from formality3.detectors import CONTRACTIONS, EMOTICON_RE

        self._lexicons = lexicons
        self._classify = classify
        self._emoticon_re = EMOTICON_RE
        self._contractions = dict(CONTRACTIONS)
        # second-person contractions go straight to the impersonal form
        self._contractions.update({
            "you're": "one is", "you've": "one has",
            "you'd": "one would", "you'll": "one will",
        })
        # missing-apostrophe forms map to the same expansions
        self._confusions = {
            c.replace("'", ""): e for c, e in self._contractions.items()
        }
        self._abbrev_expansions = {
            "info": "information", "asap": "as soon as possible",
            "approx": "approximately", "appt": "appointment",
            "convo": "conversation", "pic": "picture", "pics": "pictures",
            "vid": "video", "vids": "videos", "min": "minute",
            "mins": "minutes", "sec": "second", "secs": "seconds",
            "prob": "problem", "probs": "problems", "def": "definitely",
            "fav": "favorite", "fave": "favorite", "bio": "biography",
            "rec": "recommendation", "recs": "recommendations",
            "stats": "statistics", "admin": "administrator",
            "intro": "introduction", "combo": "combination",
            "promo": "promotion", "congrats": "congratulations",
        }
        self._second_person = {
            "you": "one", "your": "one's", "yours": "one's",
            "yourself": "oneself", "yourselves": "oneself",
        }

    def respond(self, template_id: str, sentence: str) -> str:
        if template_id == "judge_binary":
            label = self._classify(sentence, self._lexicons).label
            return "1" if label == FormalityLabel.FORMAL else "0"
        if template_id == "label_3way":
            return str(int(self._classify(sentence, self._lexicons).label))
        if template_id == "judge_fluency":
            return str(sum(map(ord, sentence)) % 6)
        if template_id in ("rewrite_casual_to_formal",
                           "rewrite_informal_to_formal_naive"):
            return self.to_formal(sentence)
        if template_id in ("rewrite_casual_to_informal", "revision_informal"):
            return self.to_informal(sentence)
        raise ConfigError(f"no fallback behavior for template {template_id!r}")

    def _expand(self, word: str) -> str:
        lowered = word.lower()
        for table in (self._contractions, self._confusions,
                      self._abbrev_expansions, self._second_person):
            if lowered in table:
                expanded = table[lowered]
                if word[:1].isupper():
                    return expanded[:1].upper() + expanded[1:]
                return expanded
        return word

    def to_formal(self, text: str) -> str:
        dictionary = self._lexicons.words("dictionary")
        drop = (self._lexicons.words("slang") | self._lexicons.words("netspeak")
                | self._lexicons.words("interjections"))
        text = self._emoticon_re.sub(" ", text)
        words: list[str] = []
        for raw in text.split():
            word = raw.strip(".,!?;:()[]\"'’“”")
            if not word:
                continue
            lowered = word.lower()
            if lowered in drop or all(not c.isalnum() for c in word):
                continue
            if word.isalpha() and lowered not in dictionary:
                collapsed = re.sub(r"([a-z])\1{2,}", r"\1", lowered)
                if collapsed != lowered:
                    word = collapsed
            for piece in self._expand(word).split():
                if piece.lower() in self._second_person:
                    piece = self._second_person[piece.lower()]
                if piece == "i":
                    piece = "I"
                # consecutive duplicates would read as typos downstream
                if words and piece.isalpha() and words[-1].lower() == piece.lower():
                    continue
                words.append(piece)
        # drop a vocative opener left over from the casual source
        while words and words[0].lower() in self._lexicons.words("direct_address"):
            words = words[1:]
        if not words:
            words = ["the", "matter", "was", "noted"]
        if words[0].lower() == "that":  # the hedge frame already supplies one
            words[0] = "it"
        body = " ".join(words)
        if words[0] != "I":
            body = body[:1].lower() + body[1:]
        return f"It appears that {body}."

    def to_informal(self, text: str) -> str:
        body = text.strip().rstrip(".!?").lower()
        if not body:
            body = "nothing happened"
        return f"lol {body} idk :)"
