"""lexqa-sidecar: model server for the lexqa inference wire protocol."""

from .app import create_app
from .backend import ModelBackend, ModelsNotReady, QAAnswer

__version__ = "0.1.0"

__all__ = ["create_app", "ModelBackend", "ModelsNotReady", "QAAnswer", "__version__"]
