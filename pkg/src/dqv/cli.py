"""Command line front end.

All commands go through the HTTP service: by default the app is mounted
in-process, with ``--server`` they hit a remote instance instead, so the
terminal and a deployed service always agree.
"""

from __future__ import annotations

import json
import sys
from typing import Optional

import click
import httpx


def _client(server: Optional[str]) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=300.0)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from starlette.testclient import TestClient

    from .service import app

    return TestClient(app)


def _fail(resp: httpx.Response):
    try:
        detail = resp.json().get("detail", resp.text)
    except ValueError:
        detail = resp.text
    click.echo("error: %s" % detail, err=True)
    sys.exit(2)


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="base URL of a running service (default: in-process)")
@click.pass_context
def main(ctx, server):
    """Exact symbolic verification of the deformation identity catalogue."""
    ctx.obj = server


@main.command("list")
@click.pass_obj
def list_cmd(server):
    """List the registered checks."""
    with _client(server) as client:
        resp = client.get("/checks")
        if resp.status_code != 200:
            _fail(resp)
        for item in resp.json():
            click.echo("%-24s order %d (%s)  %s" % (
                item["check_id"], item["default_order"],
                item["default_convention"], item["description"],
            ))


@main.command()
@click.argument("check_id")
@click.option("--flags", default=None, metavar="FLAGS",
              help="comma-separated: strict,symmetric,totally-symmetric,coherent,unital")
@click.option("--order", default=None, type=int)
@click.option("--convention", default=None, type=click.Choice(["h", "hbar"]))
@click.pass_obj
def check(server, check_id, flags, order, convention):
    """Run one check and report its residuals."""
    body = {"flags": flags, "order": order, "convention": convention}
    with _client(server) as client:
        resp = client.post("/checks/%s/run" % check_id, json=body)
        if resp.status_code != 200:
            _fail(resp)
        data = resp.json()
    click.echo(data["summary"])
    for name, residual in data["residuals"].items():
        click.echo("  %s: %s" % (name, residual))
    if data["notes"]:
        click.echo("  note: %s" % data["notes"])
    sys.exit(0 if data["passed"] else 1)


@main.command()
@click.argument("expression")
@click.option("--flags", default="", metavar="FLAGS")
@click.pass_obj
def normalize(server, expression, flags):
    """Normalize an expression under the given relation flags."""
    with _client(server) as client:
        resp = client.post("/normalize",
                           json={"expression": expression, "flags": flags})
        if resp.status_code != 200:
            _fail(resp)
        click.echo(resp.json()["normalized"])


@main.command()
@click.option("--format", "fmt", default="text",
              type=click.Choice(["json", "text"]))
@click.option("--out", default=None, type=click.Path(writable=True))
@click.pass_obj
def report(server, fmt, out):
    """Run every check and emit a report; exit 0 only if all pass."""
    results = []
    with _client(server) as client:
        resp = client.get("/checks")
        if resp.status_code != 200:
            _fail(resp)
        for item in resp.json():
            run = client.post("/checks/%s/run" % item["check_id"], json={})
            if run.status_code != 200:
                _fail(run)
            results.append(run.json())
    if fmt == "json":
        text = json.dumps({
            "all_passed": all(r["passed"] for r in results),
            "results": results,
        }, indent=2)
    else:
        lines = [r["summary"] for r in results]
        lines.append("all passed" if all(r["passed"] for r in results)
                     else "FAILURES present")
        text = "\n".join(lines)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)
    sys.exit(0 if all(r["passed"] for r in results) else 1)


@main.command()
@click.option("--seed", default=0, type=int)
@click.option("--instances", default=1, type=int)
@click.pass_obj
def oracle(server, seed, instances):
    """Run seeded finite-model instances and report their axiom checks."""
    with _client(server) as client:
        resp = client.post("/oracle",
                           json={"seed": seed, "instances": instances})
        if resp.status_code != 200:
            _fail(resp)
        data = resp.json()
    for inst in data["instances"]:
        status = "PASS" if inst["passed"] else "FAIL"
        click.echo("seed %-6d %s" % (inst["seed"], status))
        if not inst["passed"]:
            for name, ok in inst["checks"].items():
                if not ok:
                    click.echo("  failing: %s" % name)
    sys.exit(0 if data["all_passed"] else 1)


if __name__ == "__main__":
    main()
