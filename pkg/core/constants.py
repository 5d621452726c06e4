from enum import Enum

DEFAULT_SEED = 0

MAX_DIM_ENV_VAR = "QUIVERLAB_MAX_DIM"
SERIES_MAX_TOTAL = 10
FLAGS_MAX_TOTAL = 8

# Unicode minus and ASCII hyphen are both read as '-'.
PLUS_SIGN = "+"
MINUS_SIGNS = ("-", "−")


class QuiverKind(str, Enum):
    AffineA = "affine-a"
    Cyclic = "cyclic"


class Direction(str, Enum):
    Plus = "plus"
    Minus = "minus"


class StandardKind(str, Enum):
    Projective = "projective"
    Injective = "injective"


class RootKind(str, Enum):
    Real = "real"
    Imaginary = "imaginary"


class RootClass(str, Enum):
    Preprojective = "preprojective"
    Preinjective = "preinjective"
    Regular = "regular"
    Homogeneous = "homogeneous"


class LabelKind(str, Enum):
    Preprojective = "P"
    Preinjective = "I"
    Tube = "T"
