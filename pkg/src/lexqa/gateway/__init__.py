"""Inference boundary: wire protocol, remote client, and offline stub."""

from .base import (
    GatewayAlignmentError,
    GatewayConnectionError,
    GatewayError,
    GatewayProtocolError,
    GatewayTimeout,
    GatewayUnavailable,
    QAResult,
    validate_qa,
    validate_scores,
)
from .http import HttpGateway
from .server import BackendUnavailable, create_gateway_app
from .stub import STUB_QA_MODEL, STUB_SIMILARITY_MODEL, StubGateway, jaccard

__all__ = [
    "GatewayAlignmentError",
    "GatewayConnectionError",
    "GatewayError",
    "GatewayProtocolError",
    "GatewayTimeout",
    "GatewayUnavailable",
    "QAResult",
    "validate_qa",
    "validate_scores",
    "HttpGateway",
    "BackendUnavailable",
    "create_gateway_app",
    "StubGateway",
    "jaccard",
    "STUB_QA_MODEL",
    "STUB_SIMILARITY_MODEL",
]
