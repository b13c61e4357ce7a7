#!/usr/bin/env python3
"""Generate the statelab API reference.

Writes one ``.rst`` page per module and one ``index.rst`` per package
under ``docs/source/api/statelab``, so the sidebar follows the package
tree (grid, manifold, dynamics, walks, stats, experiments). The data
directories ``presets/`` and ``schemas/`` are not packages and are
skipped.

Run:
    python docs/source/generate_api.py
"""

from __future__ import annotations

import shutil
from pathlib import Path

DOCS_SOURCE = Path(__file__).resolve().parent
REPO_ROOT = DOCS_SOURCE.parents[1]
PKG_DIR = REPO_ROOT / "statelab"
API_ROOT = DOCS_SOURCE / "api"
GENERATED_ROOT = API_ROOT / "statelab"

# Sidebar titles of the subpackages
PACKAGE_TITLES = {
    "statelab": "statelab",
    "grid": "Grid and Hilbert space",
    "manifold": "Packet manifold",
    "dynamics": "Dynamics",
    "walks": "Random walks",
    "stats": "Statistics",
    "experiments": "Experiments",
}

API_INDEX = """\
API Reference
=============

Grids and propagators, packet geometry, velocity decomposition, random
walks, statistical tests, the macroscopic estimate and the experiment
runner, organized by package.

.. toctree::
   :maxdepth: 1

   statelab/index
"""


def _heading(title: str) -> list[str]:
    return [title, "=" * len(title), ""]


def _dotted(path: Path) -> str:
    return ".".join(path.relative_to(REPO_ROOT).with_suffix("").parts)


def _package_page(package: Path) -> str:
    # No :members: on package pages; members live on the module pages
    subpackages = sorted(p for p in package.iterdir() if (p / "__init__.py").is_file())
    modules = sorted(p for p in package.glob("*.py") if not p.name.startswith("_"))
    lines = _heading(PACKAGE_TITLES.get(package.name, package.name))
    lines += [f".. automodule:: {_dotted(package)}", "   :no-index:", ""]
    children = [f"{p.name}/index" for p in subpackages] + [p.stem for p in modules]
    if children:
        lines += [".. toctree::", "   :maxdepth: 2", ""]
        lines += [f"   {child}" for child in children]
        lines.append("")
    return "\n".join(lines)


def _module_page(module: Path) -> str:
    lines = _heading(module.stem)
    lines += [
        f".. automodule:: {_dotted(module)}",
        "   :members:",
        "   :undoc-members:",
        "   :show-inheritance:",
        "   :member-order: bysource",
        "",
    ]
    return "\n".join(lines)


def _write(path: Path, content: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(content, encoding="utf-8")


def main() -> None:
    if not PKG_DIR.is_dir():
        raise SystemExit(f"Package directory not found: {PKG_DIR}")
    if GENERATED_ROOT.exists():
        shutil.rmtree(GENERATED_ROOT)

    for init in sorted(PKG_DIR.rglob("__init__.py")):
        package = init.parent
        out_dir = GENERATED_ROOT / package.relative_to(PKG_DIR)
        _write(out_dir / "index.rst", _package_page(package))
        for module in package.glob("*.py"):
            if not module.name.startswith("_"):
                _write(out_dir / f"{module.stem}.rst", _module_page(module))

    _write(API_ROOT / "index.rst", API_INDEX)


if __name__ == "__main__":
    main()
