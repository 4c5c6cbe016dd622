"""Command-line front door: ingest documents, ask questions, evaluate, serve.

Exit codes: 0 success, 2 usage error, 3 document or gold file not found,
4 gateway failure.
"""

from __future__ import annotations

import json
import time
from pathlib import Path

import click

from .engine import DEFAULT_MAX_SPAN_TOKENS, DEFAULT_N, SCORERS, QAEngine
from .evaluation import eval_report_markdown, eval_report_to_dict, evaluate, load_gold
from .gateway import HttpGateway, StubGateway, create_gateway_app
from .gateway.base import GatewayError
from .ingestion import GATEWAY_COUNTER, WORD_COUNTER, default_ruleset, load_ruleset
from .report import render
from .service import create_service_app
from .store import DocumentNotFound, DocumentStore
from .synth import synthetic_document, synthetic_gold

EXIT_NOT_FOUND = 3
EXIT_GATEWAY = 4


def _fail(message: str, code: int) -> None:
    exc = click.ClickException(message)
    exc.exit_code = code
    raise exc


def engine_options(fn):
    fn = click.option(
        "--gateway-url",
        envvar="LEXQA_GATEWAY_URL",
        default=None,
        help="Model gateway base URL (env: LEXQA_GATEWAY_URL).",
    )(fn)
    fn = click.option(
        "--rules",
        "rules_path",
        type=click.Path(exists=True, dir_okay=False),
        default=None,
        help="Abbreviation rule file; defaults to the bundled legal rules.",
    )(fn)
    fn = click.option(
        "--max-span-tokens",
        type=click.IntRange(min=1),
        default=DEFAULT_MAX_SPAN_TOKENS,
        show_default=True,
        help="Token budget per context span.",
    )(fn)
    fn = click.option(
        "--counter",
        type=click.Choice([WORD_COUNTER, GATEWAY_COUNTER]),
        default=WORD_COUNTER,
        show_default=True,
        help="Token counter: whitespace heuristic or the gateway tokenizer.",
    )(fn)
    return fn


def store_option(fn):
    return click.option(
        "--store",
        "store_root",
        envvar="LEXQA_STORE",
        default="lexqa_store",
        show_default=True,
        help="Document store directory (env: LEXQA_STORE).",
    )(fn)


def _build_engine(gateway_url, rules_path, max_span_tokens, counter, default_n=DEFAULT_N):
    gateway = HttpGateway(gateway_url) if gateway_url else None
    if counter == GATEWAY_COUNTER and gateway is None:
        raise click.UsageError("--counter gateway requires --gateway-url")
    ruleset = load_ruleset(rules_path) if rules_path else default_ruleset()
    return QAEngine(
        gateway,
        ruleset=ruleset,
        max_span_tokens=max_span_tokens,
        counter_mode=counter,
        default_n=default_n,
    )


@click.group()
@click.version_option(package_name="lexqa")
def main():
    """Question answering over legal and regulatory documents."""


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--title", default=None, help="Display title; defaults to the file stem.")
@store_option
@engine_options
def ingest(path, title, store_root, gateway_url, rules_path, max_span_tokens, counter):
    """Load a plain-text document, partition it, and persist it in the store."""
    engine = _build_engine(gateway_url, rules_path, max_span_tokens, counter)
    store = DocumentStore(store_root, engine)
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc_id = store.upload(title or Path(path).stem, text, source_uri=str(path))
        span_count = len(store.spans_for(doc_id))
    except GatewayError as err:
        _fail(f"gateway failure: {err}", EXIT_GATEWAY)
    click.echo(f"doc_id: {doc_id}")
    click.echo(f"spans: {span_count}")


@main.command()
@click.argument("target")
@click.argument("question")
@click.option("--top-n", type=click.IntRange(min=1), default=DEFAULT_N, show_default=True)
@click.option(
    "--scorer", type=click.Choice(list(SCORERS)), default="tfidf", show_default=True
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["json", "md", "html"]),
    default="json",
    show_default=True,
)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the report here.")
@store_option
@engine_options
def ask(
    target,
    question,
    top_n,
    scorer,
    fmt,
    out,
    store_root,
    gateway_url,
    rules_path,
    max_span_tokens,
    counter,
):
    """Answer QUESTION over TARGET (a stored doc_id, or a text file for one-shot use)."""
    engine = _build_engine(gateway_url, rules_path, max_span_tokens, counter)
    if scorer == "cross" and engine.gateway is None:
        raise click.UsageError("scorer 'cross' requires --gateway-url or LEXQA_GATEWAY_URL")

    prepared = None
    store_dir = Path(store_root)
    if (store_dir / "manifest.json").exists():
        store = DocumentStore(store_root, engine)
        if store.has(target):
            prepared = store.get_prepared(target)
    if prepared is None:
        path = Path(target)
        if not path.is_file():
            _fail(f"{target!r} is neither a stored doc_id nor a file", EXIT_NOT_FOUND)
        prepared = engine.prepare(path.stem, path.read_text(encoding="utf-8"))

    try:
        report = engine.answer(prepared, question, n=top_n, scorer=scorer)
    except GatewayError as err:
        _fail(f"gateway failure: {err}", EXIT_GATEWAY)
    payload = render(report, "markdown" if fmt == "md" else fmt)
    if out:
        Path(out).write_bytes(payload)
        click.echo(f"wrote {out}")
    else:
        click.echo(payload.decode("utf-8"))


@main.command("eval")
@click.argument("gold_path")
@click.option("--top-n", type=click.IntRange(min=1), default=DEFAULT_N, show_default=True)
@click.option(
    "--scorer", type=click.Choice(list(SCORERS)), default="tfidf", show_default=True
)
@click.option(
    "--report", "report_path", type=click.Path(dir_okay=False), default=None,
    help="Write the full evaluation report as JSON.",
)
@store_option
@engine_options
def eval_cmd(
    gold_path,
    top_n,
    scorer,
    report_path,
    store_root,
    gateway_url,
    rules_path,
    max_span_tokens,
    counter,
):
    """Run the evaluation protocol over a JSONL gold dataset."""
    if not Path(gold_path).is_file():
        _fail(f"gold file not found: {gold_path}", EXIT_NOT_FOUND)
    engine = _build_engine(gateway_url, rules_path, max_span_tokens, counter)
    if scorer == "cross" and engine.gateway is None:
        raise click.UsageError("scorer 'cross' requires --gateway-url or LEXQA_GATEWAY_URL")

    partition_config, entries = load_gold(gold_path)
    if not entries:
        _fail(f"gold file has no entries: {gold_path}", EXIT_NOT_FOUND)
    if partition_config:
        current = engine.partition_config()
        mismatched = {
            key: (value, current.get(key))
            for key, value in partition_config.items()
            if key in current and current[key] != value
        }
        if mismatched:
            raise click.UsageError(
                "gold file was annotated against a different partitioning: "
                + ", ".join(f"{k}={v[0]!r} (current {v[1]!r})" for k, v in mismatched.items())
            )

    store = DocumentStore(store_root, engine)
    prepared_cache = {}
    results, latencies = [], []
    for entry in entries:
        if entry.doc_id not in prepared_cache:
            try:
                prepared_cache[entry.doc_id] = store.get_prepared(entry.doc_id)
            except DocumentNotFound as err:
                _fail(str(err), EXIT_NOT_FOUND)
        started = time.perf_counter()
        try:
            result = engine.answer(
                prepared_cache[entry.doc_id], entry.question, n=top_n, scorer=scorer
            )
        except GatewayError as err:
            _fail(f"gateway failure: {err}", EXIT_GATEWAY)
        latencies.append(time.perf_counter() - started)
        results.append(result)

    ev = evaluate(results, entries, top_n, latencies)
    click.echo(eval_report_markdown(ev))
    if report_path:
        Path(report_path).write_text(
            json.dumps(eval_report_to_dict(ev), indent=2) + "\n", encoding="utf-8"
        )
        click.echo(f"wrote {report_path}")


@main.command()
@click.option("--listen", default="127.0.0.1:8080", show_default=True)
@click.option("--default-n", type=click.IntRange(min=1), default=DEFAULT_N, show_default=True)
@click.option("--default-scorer", type=click.Choice(list(SCORERS)), default=None)
@store_option
@engine_options
def serve(
    listen,
    default_n,
    default_scorer,
    store_root,
    gateway_url,
    rules_path,
    max_span_tokens,
    counter,
):
    """Start the HTTP service for the CLI and the web console."""
    import uvicorn

    engine = _build_engine(gateway_url, rules_path, max_span_tokens, counter, default_n)
    store = DocumentStore(store_root, engine)
    app = create_service_app(store, default_scorer=default_scorer)
    host, port = _parse_listen(listen)
    uvicorn.run(app, host=host, port=port)


@main.command("stub-gateway")
@click.option("--listen", default="127.0.0.1:8091", show_default=True)
def stub_gateway(listen):
    """Serve the deterministic stub backend over the gateway wire protocol."""
    import uvicorn

    host, port = _parse_listen(listen)
    uvicorn.run(create_gateway_app(StubGateway()), host=host, port=port)


@main.command()
@click.option("--sentences", type=click.IntRange(min=1), default=620, show_default=True)
@click.option("--seed", type=int, default=7, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option(
    "--gold", "gold_path", type=click.Path(dir_okay=False), default=None,
    help="Also write a synthetic gold set annotated against the default partitioning.",
)
@click.option("--questions", type=click.IntRange(min=1), default=10, show_default=True)
def synth(sentences, seed, out, gold_path, questions):
    """Generate a synthetic legal-flavored document (and optional gold set)."""
    text = synthetic_document(sentences, seed=seed)
    Path(out).write_text(text, encoding="utf-8")
    click.echo(f"wrote {out} ({sentences} sentences)")
    if gold_path:
        from .evaluation import save_gold

        engine = QAEngine()
        prepared = engine.prepare(Path(out).stem, text)
        entries = synthetic_gold(prepared.doc, prepared.spans, questions, seed=seed)
        save_gold(gold_path, entries, partition_config=engine.partition_config())
        click.echo(f"wrote {gold_path} ({questions} questions)")


def _parse_listen(listen: str) -> tuple[str, int]:
    host, _, port = listen.rpartition(":")
    if not host or not port.isdigit():
        raise click.UsageError(f"--listen must be HOST:PORT, got {listen!r}")
    return host, int(port)


if __name__ == "__main__":
    main()
