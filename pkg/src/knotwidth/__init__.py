"""Width calculus for Morse words, cables and planar Morse diagrams."""

from .diagram import (
    Cap,
    CableParams,
    Cross,
    Cup,
    Event,
    MorseDiagram,
    bridge,
    cable,
    cable_slope,
    component_count,
    critical_word,
    emit_diagram,
    parse_diagram,
    validate,
    width,
    writhe,
)
from .reduction import (
    Move,
    ReductionTrace,
    apply_type_I,
    apply_type_II,
    explore,
    reduce,
    stabilize,
)
from .words import (
    BlockForm,
    LevelProfile,
    MorseWord,
    NotInZhat,
    ThickThinTuple,
    block_form,
    bridge_number,
    cable_word,
    enumerate_zhat,
    is_bridge_thin,
    is_bridge_word,
    level_profile,
    parse_word,
    thick_thin,
    validate_zhat,
    width_from_profile,
    width_from_thick_thin,
    width_from_word,
)

__version__ = "0.1.0"
