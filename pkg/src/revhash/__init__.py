"""revhash: reversible-circuit synthesis from .pla tables and hash inversion.

Pipeline: parse a .pla cover, convert it to an XOR (ESOP) cover, minimize
the cube count, map cubes to NOT/CNOT/Toffoli gates with negative controls,
and reverse the gate order to obtain the inverse function's circuit.
Preimages then fall out of backward deduction over the reversed structure.
"""

from .analyze import AvalancheReport, BenchRecord, avalanche_check, bench_run, collision_scan
from .circuit import Circuit, Gate, read_circuit_json, write_circuit_json
from .errors import PlaLexicalError, PlaParseError, PlaStructureError, ResourceLimitError
from .esop import CoverCost, EsopCover, cost, evaluate_esop, from_pla, minimize
from .invert import PreimageResult, preimage_one, preimages_bruteforce, preimages_deduce
from .pla import (
    CoverSemantics,
    Cube,
    Literal,
    PlaFunction,
    evaluate_pla,
    expand_to_minterms,
    parse_pla,
    write_pla,
)
from .sim import (
    VerificationReport,
    VerifyMode,
    apply_gate,
    run,
    truth_table,
    verify_against_spec,
    verify_identity,
)
from .synth import (
    CircuitStats,
    expand_negative_controls,
    read_real,
    remove_superfluous_nots,
    reverse,
    stats,
    synthesize,
    write_real,
)

__version__ = "0.1.0"
