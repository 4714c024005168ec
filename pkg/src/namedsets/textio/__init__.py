"""Workspace files: parsing, canonical serialization and the command line."""

from .parser import load_workspace, parse_workspace
from .serializer import render_atom, serialize_workspace
from .workspace import (
    Diagnostic,
    InvariantViolation,
    UnknownReference,
    Workspace,
    WorkspaceError,
    WorkspaceSyntaxError,
)

__all__ = [
    "Diagnostic",
    "InvariantViolation",
    "UnknownReference",
    "Workspace",
    "WorkspaceError",
    "WorkspaceSyntaxError",
    "load_workspace",
    "parse_workspace",
    "render_atom",
    "serialize_workspace",
]
