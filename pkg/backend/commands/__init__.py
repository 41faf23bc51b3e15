"""
revolve subcommands - collected here and attached to the CLI group in main.py
"""

from .area import area
from .check import check
from .mesh import mesh
from .table import table

COMMANDS = [area, table, mesh, check]
