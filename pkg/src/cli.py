"""
Komut Satiri Arayuzu
====================
`tw` programi: reduce, phi, witness, star, matrix, oracle.

stdout yalnizca sonuc metnini tasir; teshis mesajlari stderr'e (rich) gider.
Cikis kodlari: 0 basari, 1 parse, 2 dogrulama, 3 desteklenmeyen islem.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from rich.console import Console

from .alphabet.groups import GroupSpec
from .alphabet.letters import Alphabet
from .config.constants import get_config
from .config.settings_loader import load_settings
from .dsl import (
    parse_bits, parse_coordinates, parse_expr, parse_family, parse_matrix_file, print_family, print_term,
)
from .ordinals.cardinals import CardinalRegistry
from .specker.families import BitPattern
from .specker.homomorphisms import SpeckerHom, hom_matrix, matrix_columns, phi_inverse_law, specker_witness, star_check
from .specker.occurrences import class_count
from .oracle.runner import run_oracle
from .types import LineReport, OutputFormat, format_value
from .utils.exceptions import EXIT_OK, EXIT_PARSE, TransfiniteWordError, exit_code_for
from .utils.logger import configure_logging, get_tw_logger

console = Console(stderr=True)
logger = get_tw_logger("cli")

PROG = "tw"


# ═══════════════════════════════════════════════════════════════════════════
# CALISMA BAGLAMI
# ═══════════════════════════════════════════════════════════════════════════

class Context:
    """Bir calistirmanin kardinal kaydi, alfabesi ve cikti formati."""

    def __init__(self, args: argparse.Namespace, out=None):
        self.args = args
        self.out = out or sys.stdout
        self.format = OutputFormat(args.format or get_config().output.DEFAULT_FORMAT)
        self.registry = CardinalRegistry.default()
        for spec in args.cardinal or []:
            self.registry.declare_spec(spec)
        self.alphabet = Alphabet(default=GroupSpec.parse(args.group))

    def expr(self, text: str):
        return parse_expr(text, self.registry, self.alphabet)

    def family(self, text: str):
        return parse_family(text, self.registry, self.alphabet)

    def emit(self, lines: Sequence[str], data: Dict[str, Any]) -> None:
        """Duz metinde satirlar, structured formatta JSON."""
        if self.format is OutputFormat.STRUCTURED:
            text = json.dumps(data, indent=get_config().output.JSON_INDENT, sort_keys=True)
            self.out.write(text + "\n")
            return
        for line in lines:
            self.out.write(line + "\n")

    def emit_report(self, report: LineReport) -> int:
        self.emit(report.to_lines(), report.to_dict())
        return EXIT_OK


# ═══════════════════════════════════════════════════════════════════════════
# KOMUTLAR
# ═══════════════════════════════════════════════════════════════════════════

def cmd_reduce(ctx: Context) -> int:
    text = print_term(ctx.expr(ctx.args.expr))
    ctx.emit([text], {"word": text})
    return EXIT_OK


def cmd_phi(ctx: Context) -> int:
    family = ctx.family(ctx.args.family)
    word = ctx.expr(ctx.args.expr)
    report = class_count(word, family)
    lines = [str(report.phi)]
    data = report.to_dict()
    data["family"] = print_family(family)
    if ctx.args.check:
        phi_inverse, _ = phi_inverse_law(word, family)
        lines.append(f"inverse={phi_inverse}")
        data["inverse"] = phi_inverse
    ctx.emit(lines, data)
    return EXIT_OK


def cmd_witness(ctx: Context) -> int:
    coordinates = parse_coordinates(ctx.args.coordinates, ctx.registry)
    kappa = ctx.registry.get(ctx.args.kappa)
    report = specker_witness(coordinates, kappa, ctx.alphabet)
    if not report.ok:
        logger.warning("Tanik beklenen sonucu vermedi", beta=str(report.beta))
    return ctx.emit_report(report)


def cmd_star(ctx: Context) -> int:
    width = ctx.registry.get(ctx.args.width or get_config().cardinals.DEFAULT_LAMBDA)
    left = BitPattern(parse_bits(ctx.args.bits_a, ctx.registry), width)
    right = BitPattern(parse_bits(ctx.args.bits_b, ctx.registry), width)
    result = star_check(left, right)
    ctx.emit([f"star={format_value(result)}"], {"star": result, "left": print_family(left), "right": print_family(right)})
    return EXIT_OK


def cmd_matrix(ctx: Context) -> int:
    text = Path(ctx.args.file).read_text(encoding="utf-8")
    homs = [SpeckerHom(tuple(group)) for group in parse_matrix_file(text, ctx.registry, ctx.alphabet)]
    columns = matrix_columns(homs)
    matrix = hom_matrix(homs, columns, ctx.alphabet, workers=ctx.args.workers)
    rows = [" ".join(str(int(value)) for value in row) for row in matrix]
    ctx.emit(rows, {"columns": [print_family(c) for c in columns], "rows": matrix.tolist()})
    return EXIT_OK


def cmd_oracle(ctx: Context) -> int:
    args = ctx.args
    report = run_oracle(args.trials, args.seed, args.max_word, args.max_pattern, args.workers)
    return ctx.emit_report(report)


COMMANDS: Dict[str, Callable[[Context], int]] = {
    "reduce": cmd_reduce,
    "phi": cmd_phi,
    "witness": cmd_witness,
    "star": cmd_star,
    "matrix": cmd_matrix,
    "oracle": cmd_oracle,
}


# ═══════════════════════════════════════════════════════════════════════════
# ARGUMANLAR
# ═══════════════════════════════════════════════════════════════════════════

class _ArgumentParser(argparse.ArgumentParser):
    """Arguman hatalari parse hatasi (1) ile cikar."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        console.print(f"{self.prog}: {message}", style="red", markup=False, highlight=False)
        sys.exit(EXIT_PARSE)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog=PROG,
        description="Transfinit kelimeler ve occurrence sayan homomorfizmalar",
    )
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=None,
                        help="Cikti formati (varsayilan: config)")
    parser.add_argument("--cardinal", action="append", metavar="NAME[:RANK]",
                        help="Ek kardinal atomu (tekrarlanabilir)")
    parser.add_argument("--group", default="integers",
                        help="Koordinat grubu: integers, cyclic:N, free:K")
    parser.add_argument("--verbose", action="store_true", help="DEBUG loglari (stderr)")

    sub = parser.add_subparsers(dest="command", required=True)

    reduce_p = sub.add_parser("reduce", help="Kelimeyi normal forma indirge")
    reduce_p.add_argument("expr")

    phi_p = sub.add_parser("phi", help="φ_g(X) = |Occ+| - |Occ-|")
    phi_p.add_argument("--family", required=True, help="Mk(k1), Mg({...}, L), fin(...) veya {bits}")
    phi_p.add_argument("--check", action="store_true", help="φ(X⁻¹) degerini de yaz")
    phi_p.add_argument("expr")

    witness_p = sub.add_parser("witness", help="ρ_F(W) = 1 ama φ_κ(W) = 1 olan W")
    witness_p.add_argument("coordinates", help="Virgulle ayrilmis sonlu koordinat kumesi F")
    witness_p.add_argument("kappa", help="Duzenli sayilamaz kardinal")

    star_p = sub.add_parser("star", help="Iki bit tarifi icin (*) kosulu")
    star_p.add_argument("bits_a")
    star_p.add_argument("bits_b")
    star_p.add_argument("--width", default=None, help="Blok genisligi λ (varsayilan: L)")

    matrix_p = sub.add_parser("matrix", help="φ_α(M_g) matrisi")
    matrix_p.add_argument("file", help="Satir basina bir aile; bos satir indeks kumelerini ayirir")
    matrix_p.add_argument("--workers", type=int, default=None)

    oracle_p = sub.add_parser("oracle", help="Sembolik motor ile kaba kuvvet karsilastirmasi")
    oracle_p.add_argument("--trials", type=int, default=None)
    oracle_p.add_argument("--seed", type=int, default=None)
    oracle_p.add_argument("--max-word", dest="max_word", type=int, default=None)
    oracle_p.add_argument("--max-pattern", dest="max_pattern", type=int, default=None)
    oracle_p.add_argument("--workers", type=int, default=None)

    return parser


def run(argv: Optional[List[str]] = None, out=None) -> int:
    """Argumanlari isle, komutu calistir, cikis kodunu dondur."""
    args = build_parser().parse_args(argv)
    settings = get_config().logging
    configure_logging(level="DEBUG" if args.verbose else settings.LOG_LEVEL,
                      log_to_file=settings.LOG_TO_FILE, log_dir=settings.LOG_DIR,
                      max_file_size_mb=settings.MAX_LOG_SIZE_MB, backup_count=settings.BACKUP_COUNT)
    try:
        ctx = Context(args, out)
        return COMMANDS[args.command](ctx)
    except TransfiniteWordError as e:
        logger.error("Komut basarisiz", **e.to_dict())
        console.print(f"{PROG}: {e}", style="red", markup=False, highlight=False)
        return exit_code_for(e)
    except OSError as e:
        logger.error("Dosya okunamadi", error=str(e))
        console.print(f"{PROG}: {e}", style="red", markup=False, highlight=False)
        return EXIT_PARSE


def main() -> int:
    load_settings()
    return run()
