"""Discovering, fetching and normalizing Java source files."""

from __future__ import annotations

import hashlib
import logging
import os
import re
import subprocess
from dataclasses import dataclass, field
from pathlib import Path

logger = logging.getLogger(__name__)

# Characters that can change the stripper's state.
_INTERESTING = re.compile(r'["\'/]')


@dataclass(frozen=True)
class RepoManifest:
    entries: tuple[tuple[str, str | None], ...]

    def __post_init__(self):
        seen = set()
        for url, _branch in self.entries:
            if not url:
                raise ValueError("manifest contains an empty repository URL")
            if url in seen:
                raise ValueError(f"duplicate repository URL in manifest: {url}")
            seen.add(url)

    @classmethod
    def parse(cls, text: str) -> "RepoManifest":
        """Parse ``URL[<TAB>branch]`` lines; blank lines and ``#`` comments are ignored."""
        entries = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            url, _, branch = line.partition("\t")
            entries.append((url.strip(), branch.strip() or None))
        return cls(tuple(entries))


@dataclass(frozen=True)
class SourceUnit:
    """One comment-stripped Java file."""

    project: str
    relative_path: str
    stripped_text: str
    total_lines: int
    loc: int
    content_hash: str
    warnings: tuple[str, ...] = field(default=(), compare=False)

    @classmethod
    def from_text(cls, text: str, project: str = "", relative_path: str = "", raw: bytes | None = None,
                  warnings: tuple[str, ...] = ()) -> "SourceUnit":
        text = normalize_newlines(text)
        stripped, strip_warnings = strip_comments_with_warnings(text)
        if raw is None:
            raw = text.encode("utf-8")
        return cls(
            project=project,
            relative_path=relative_path,
            stripped_text=stripped,
            total_lines=line_count(text),
            loc=count_loc(stripped),
            content_hash=hashlib.sha256(raw).hexdigest(),
            warnings=tuple(warnings) + tuple(strip_warnings),
        )


def normalize_newlines(text: str) -> str:
    return text.replace("\r\n", "\n").replace("\r", "\n")


def line_count(text: str) -> int:
    if not text:
        return 0
    return text.count("\n") + (0 if text.endswith("\n") else 1)


def strip_comments(text: str) -> str:
    """Blank out ``//`` and ``/* */`` comments without moving any line or literal."""
    return strip_comments_with_warnings(text)[0]


def strip_comments_with_warnings(text: str) -> tuple[str, list[str]]:
    # States: code, line comment, block comment, string, char. The regex only
    # skips ahead to the next character that can cause a transition.
    out: list[str] = []
    warnings: list[str] = []
    n = len(text)
    i = 0
    emitted = 0
    search = _INTERESTING.search
    while True:
        m = search(text, i)
        if m is None:
            break
        i = m.start()
        c = text[i]
        if c == "/":
            nxt = text[i + 1] if i + 1 < n else ""
            if nxt == "/":
                end = text.find("\n", i)
                if end < 0:
                    end = n
                out.append(text[emitted:i])
                out.append(" " * (end - i))
                emitted = i = end
            elif nxt == "*":
                end = text.find("*/", i + 2)
                if end < 0:
                    warnings.append(f"unterminated block comment at offset {i}")
                    end = n
                else:
                    end += 2
                out.append(text[emitted:i])
                out.append(re.sub(r"[^\n]", " ", text[i:end]))
                emitted = i = end
            else:
                i += 1
        elif c == '"' and text.startswith('"""', i):
            end = text.find('"""', i + 3)
            i = n if end < 0 else end + 3
        else:
            i = _skip_quoted(text, i, c)
    out.append(text[emitted:])
    return "".join(out), warnings


def _skip_quoted(text: str, i: int, quote: str) -> int:
    # Literals cannot span lines; an unterminated one ends at the newline.
    n = len(text)
    i += 1
    while i < n:
        c = text[i]
        if c == "\\":
            i += 2
        elif c == quote:
            return i + 1
        elif c == "\n":
            return i
        else:
            i += 1
    return n


def count_loc(stripped: str) -> int:
    """Number of lines holding at least one non-whitespace character."""
    return sum(1 for line in stripped.split("\n") if line.strip())


def discover(root: str | os.PathLike) -> list[Path]:
    """All ``.java`` files under ``root``, sorted by their path relative to it."""
    root = Path(root)
    if not root.is_dir() or not os.access(root, os.R_OK | os.X_OK):
        raise OSError(f"corpus root is not a readable directory: {root}")

    def onerror(err):
        logger.warning("skipping unreadable directory: %s", err)

    found = []
    for dirpath, _dirnames, filenames in os.walk(root, onerror=onerror):
        for name in filenames:
            if name.endswith(".java"):
                found.append(Path(dirpath, name))
    return sorted(found, key=lambda p: p.relative_to(root).as_posix())


def load_unit(path: str | os.PathLike, root: str | os.PathLike, project: str) -> SourceUnit:
    """Read and strip one file; non-UTF-8 bytes are replaced and flagged."""
    path = Path(path)
    raw = path.read_bytes()
    warnings = []
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError:
        text = raw.decode("utf-8", errors="replace")
        warnings.append("file is not valid UTF-8; undecodable bytes were replaced")
    rel = path.relative_to(root).as_posix()
    unit = SourceUnit.from_text(text, project=project, relative_path=rel, raw=raw, warnings=tuple(warnings))
    for w in unit.warnings:
        logger.warning("%s: %s", rel, w)
    return unit


def dedup(units):
    """Drop files whose content hash was already seen at a smaller (project, path)."""
    winners: dict[str, tuple[str, str]] = {}
    for u in units:
        key = (u.project, u.relative_path)
        best = winners.get(u.content_hash)
        if best is None or key < best:
            winners[u.content_hash] = key
    return [u for u in units if winners[u.content_hash] == (u.project, u.relative_path)]


def project_name(url: str) -> str:
    parts = [p for p in re.split(r"[/:]", url.rstrip("/")) if p]
    name = parts[-1] if parts else "repo"
    if name.endswith(".git"):
        name = name[:-4]
    return name or "repo"


def fetch(manifest: RepoManifest, dest: str | os.PathLike, *, failures: list | None = None,
          git: str = "git") -> list[Path]:
    """Shallow-clone every manifest entry into ``dest/<project>``.

    Failed clones are logged and appended to ``failures`` as ``(url, message)``;
    they never abort the batch.
    """
    dest = Path(dest)
    dest.mkdir(parents=True, exist_ok=True)
    names = [project_name(url) for url, _ in manifest.entries]
    clashes = {n for n in names if names.count(n) > 1}
    cloned = []
    env = dict(os.environ, GIT_TERMINAL_PROMPT="0")
    for (url, branch), name in zip(manifest.entries, names):
        if name in clashes:
            parts = [p for p in re.split(r"[/:]", url.rstrip("/")) if p]
            owner = parts[-2] if len(parts) > 1 else "repo"
            name = f"{owner}__{name}"
        target = dest / name
        cmd = [git, "clone", "--quiet", "--depth", "1"]
        if branch:
            cmd += ["--branch", branch]
        cmd += [url, str(target)]
        try:
            proc = subprocess.run(cmd, capture_output=True, text=True, env=env)
        except OSError as exc:
            proc = None
            message = str(exc)
        else:
            message = proc.stderr.strip() or f"git exited with status {proc.returncode}"
        if proc is not None and proc.returncode == 0:
            cloned.append(target)
            continue
        logger.warning("clone failed for %s: %s", url, message)
        if failures is not None:
            failures.append((url, message))
    return cloned
