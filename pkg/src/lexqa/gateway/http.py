"""HTTP client for the inference wire protocol.

Transient failures (timeouts, connection errors, 503) are retried with
exponential backoff up to a configured count, then fail closed. Malformed
responses are never retried: a backend that answers wrongly is broken,
not busy.
"""

from __future__ import annotations

import time
from typing import Callable

import requests

from .base import (
    GatewayConnectionError,
    GatewayError,
    GatewayProtocolError,
    GatewayTimeout,
    GatewayUnavailable,
    QAResult,
    validate_qa,
    validate_scores,
)


class HttpGateway:
    """Client for a remote model backend speaking the gateway wire protocol."""

    def __init__(
        self,
        base_url: str,
        *,
        timeout: float = 30.0,
        retries: int = 2,
        backoff: float = 0.25,
        session: requests.Session | None = None,
        sleep: Callable[[float], None] = time.sleep,
    ):
        self.base_url = base_url.rstrip("/")
        self.timeout = timeout
        self.retries = retries
        self.backoff = backoff
        self._session = session or requests.Session()
        self._sleep = sleep

    def similarity(self, question: str, candidates: list[str]) -> list[float]:
        if not candidates:
            return []
        data = self._request(
            "POST", "/v1/similarity", {"question": question, "candidates": list(candidates)}
        )
        return validate_scores(data.get("scores"), len(candidates))

    def qa(self, question: str, context: str) -> QAResult:
        data = self._request("POST", "/v1/qa", {"question": question, "context": context})
        return validate_qa(
            data.get("answer_start"), data.get("answer_end"), data.get("score"), len(context)
        )

    def token_count(self, text: str) -> int:
        data = self._request("POST", "/v1/token_count", {"text": text})
        count = data.get("count")
        if not isinstance(count, int) or isinstance(count, bool) or count < 0:
            raise GatewayProtocolError(f"token count is not a non-negative integer: {count!r}")
        return count

    def health(self) -> dict:
        return self._request("GET", "/v1/health", None)

    def _request(self, method: str, path: str, payload: dict | None) -> dict:
        url = self.base_url + path
        attempts = self.retries + 1
        last_error: GatewayError | None = None
        for attempt in range(attempts):
            try:
                response = self._session.request(
                    method, url, json=payload, timeout=self.timeout
                )
            except requests.Timeout:
                last_error = GatewayTimeout(f"{method} {url} timed out after {self.timeout}s")
            except requests.RequestException as err:
                last_error = GatewayConnectionError(f"{method} {url} failed: {err}")
            else:
                if response.status_code == 503:
                    last_error = GatewayUnavailable(
                        f"{method} {url} answered 503: {_error_detail(response)}"
                    )
                elif response.status_code != 200:
                    raise GatewayProtocolError(
                        f"{method} {url} answered {response.status_code}: {_error_detail(response)}"
                    )
                else:
                    try:
                        data = response.json()
                    except ValueError as err:
                        raise GatewayProtocolError(f"{method} {url} returned invalid JSON: {err}")
                    if not isinstance(data, dict):
                        raise GatewayProtocolError(f"{method} {url} returned a non-object body")
                    return data
            if attempt + 1 < attempts:
                self._sleep(self.backoff * (2**attempt))
        assert last_error is not None
        raise last_error


def _error_detail(response: requests.Response) -> str:
    try:
        body = response.json()
        if isinstance(body, dict) and "error" in body:
            return str(body["error"])
    except ValueError:
        pass
    return response.text[:200]
