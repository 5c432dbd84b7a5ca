"""Command line entry points: mine, order, cheatsheet, serve."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .cheatsheet import export_cheatsheet
from .errors import EmptyNetwork, ParseError
from .geometry import VIZ_KINDS
from .graph import Network
from .layout import force_layout
from .motifs import KIND_NAMES, mine
from .netio import load_network_file
from .repository import default_repository
from .seriation import barycenter_order
from .service import SessionStore, make_server


def _load(input_path: str, fmt: str | None) -> Network:
    try:
        return load_network_file(input_path, fmt)
    except FileNotFoundError:
        raise click.ClickException(f"no such file: {input_path}") from None
    except (ParseError, EmptyNetwork) as e:
        raise click.ClickException(str(e)) from None


@click.group()
def main():
    """Mine network patterns and explain how they look in node-link,
    matrix, and time-arcs visualizations."""


@main.command()
@click.argument("input_path", type=click.Path())
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default=None,
              help="Input format (default: by file extension).")
@click.option("--table", is_flag=True, help="Human-readable table instead of json.")
@click.option("--mode", type=click.Choice(["top-down", "bottom-up"]), default="top-down")
def mine_cmd(input_path, fmt, table, mode):
    """Detect all network patterns in a network file."""
    net = _load(input_path, fmt)
    result = mine(net, mode)
    if table:
        click.echo(f"{'pattern':<24}{'count':>6}")
        click.echo("-" * 30)
        for kind, count in sorted(result.counts.items(), key=lambda kv: kv[0].value):
            click.echo(f"{KIND_NAMES[kind][1]:<24}{count:>6}")
        click.echo("-" * 30)
        click.echo(f"{'total':<24}{len(result.instances):>6}")
        for inst in result.instances:
            nodes = ",".join(sorted(inst.elements.node_ids))
            click.echo(f"  {inst.kind.value}: {nodes}")
    else:
        click.echo(json.dumps(result.to_dict(), sort_keys=True, indent=2))


main.add_command(mine_cmd, name="mine")


@main.command()
@click.argument("input_path", type=click.Path())
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default=None)
@click.option("--layout", is_flag=True,
              help="Emit 2-D node coordinates instead of the row ordering.")
@click.option("--seed", default=0, show_default=True, help="Layout seed.")
def order(input_path, fmt, layout, seed):
    """Print the seriation permutation (or, with --layout, node coordinates)."""
    net = _load(input_path, fmt)
    if layout:
        coords = force_layout(net, seed)
        click.echo(json.dumps({n: [x, y] for n, (x, y) in coords.positions.items()},
                              sort_keys=True))
    else:
        ordering = barycenter_order(net)
        click.echo(json.dumps(ordering.ordered_ids()))


@main.command()
@click.argument("viz", type=click.Choice(list(VIZ_KINDS) + ["all"]))
@click.argument("out_dir", type=click.Path(file_okay=False))
def cheatsheet(viz, out_dir):
    """Write printable cheat sheet html files to OUT_DIR."""
    out = Path(out_dir)
    repo = default_repository()
    targets = VIZ_KINDS if viz == "all" else (viz,)
    try:
        out.mkdir(parents=True, exist_ok=True)
        for v in targets:
            path = out / f"cheatsheet-{v}.html"
            path.write_text(export_cheatsheet(v, repo), encoding="utf-8")
            click.echo(str(path))
    except OSError as e:
        raise click.ClickException(f"cannot write to {out}: {e}") from None


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8787, show_default=True,
              help="Port to bind; 0 picks a free port.")
@click.option("--data-dir", type=click.Path(exists=True, file_okay=False), default=None,
              help="Preload every .json/.csv network in this directory.")
def serve(host, port, data_dir):
    """Run the pattern explanation service."""
    store = SessionStore()
    if data_dir:
        for path in sorted(Path(data_dir).iterdir()):
            if path.suffix.lower() not in (".json", ".csv"):
                continue
            try:
                net = load_network_file(path)
            except (ParseError, EmptyNetwork) as e:
                click.echo(f"skipping {path.name}: {e}", err=True)
                continue
            network_id = store.add(net)
            click.echo(f"{network_id}  {path.name}  "
                       f"({len(net.nodes)} nodes, {len(net.links)} links)")
    try:
        server = make_server(host, port, store)
    except OSError as e:
        raise click.ClickException(f"cannot bind {host}:{port}: {e}") from None
    click.echo(f"listening on http://{host}:{server.server_address[1]}/api/v1")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()


if __name__ == "__main__":
    sys.exit(main())
