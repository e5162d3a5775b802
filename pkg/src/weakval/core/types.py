from enum import Enum


class Basis(str, Enum):
    """Representation a wavefunction's amplitudes are stored in."""

    POSITION = "position"
    MOMENTUM = "momentum"


class ObservableKind(str, Enum):
    """Kinds of object observables the toolkit can apply."""

    DIAGONAL_IN_Q = "diagonal_in_q"
    DIAGONAL_IN_P = "diagonal_in_p"
    P_SQUARED = "p_squared"
    Q_SQUARED = "q_squared"
    ENERGY = "energy"
    COMBINATION = "combination"


class QuasiprobKind(str, Enum):
    """Phase-space distributions computed on a (q, p) grid."""

    STANDARD_ORDERED = "standard"
    KIRKWOOD = "kirkwood"
    MARGENAU_HILL = "margenau-hill"
    WIGNER = "wigner"  # contrast only

    @property
    def is_real(self) -> bool:
        """Whether fields of this kind carry no imaginary part."""
        return self in (QuasiprobKind.MARGENAU_HILL, QuasiprobKind.WIGNER)
