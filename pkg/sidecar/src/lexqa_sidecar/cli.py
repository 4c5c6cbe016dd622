"""Serve the sidecar."""

from __future__ import annotations

import click

from .models import DEFAULT_QA_MODEL, DEFAULT_SIMILARITY_MODEL, load_backend


@click.command()
@click.option("--similarity-model", default=DEFAULT_SIMILARITY_MODEL, show_default=True)
@click.option("--qa-model", default=DEFAULT_QA_MODEL, show_default=True)
@click.option("--listen", default="127.0.0.1:8091", show_default=True)
@click.option("--device", default="cpu", show_default=True)
@click.option(
    "--activation",
    type=click.Choice(["auto", "sigmoid", "none"]),
    default="auto",
    show_default=True,
    help="Similarity score normalization applied to the model head's output.",
)
def main(similarity_model, qa_model, listen, device, activation):
    """Host the similarity, QA, and token-count endpoints with real models."""
    import uvicorn

    from .app import create_app

    host, _, port = listen.rpartition(":")
    if not host or not port.isdigit():
        raise click.UsageError(f"--listen must be HOST:PORT, got {listen!r}")
    backend = load_backend(
        similarity_model=similarity_model,
        qa_model=qa_model,
        device=device,
        activation=activation,
    )
    uvicorn.run(create_app(backend), host=host, port=int(port))


if __name__ == "__main__":
    main()
