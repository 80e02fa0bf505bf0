"""Exception types shared across the package."""


class JuniorResolveError(Exception):
    """Base class for all errors raised by this package."""


class NotIsolated(JuniorResolveError):
    """A weight shares a factor with the group order, so the singularity
    is not isolated and deformation counts would be infinite."""


class NotCalabiYau(JuniorResolveError):
    """The weights do not sum to zero modulo the group order."""


class OutOfRange(JuniorResolveError):
    """An index or weight lies outside its permitted interval."""


class InvalidFraction(JuniorResolveError):
    """Continued-fraction input (r, c) is not a reduced proper fraction."""


class MissingNode(JuniorResolveError):
    """A lattice point predicted by the quiver construction is absent
    from the simplex."""


class IrregularHole(JuniorResolveError):
    """A region left uncovered by quiver/knockout edges is not a scaled
    lattice triangle, so it has no regular tessellation."""


class NonConvergent(JuniorResolveError):
    """The knockout propagation failed to reach a stable state."""


class TruncationOverflow(JuniorResolveError):
    """A series expansion exceeded the configured term cap."""


class SizeLimit(JuniorResolveError):
    """An enumeration exceeded its configured count cap."""


class BoundUnstable(JuniorResolveError):
    """Solutions of an exponent search touched the outer shell of the
    search box even after doubling the bound once."""


class NotAnEdge(JuniorResolveError):
    """The requested pair of points is not an edge of the triangulation."""


class BoundaryEdge(JuniorResolveError):
    """Edge-strength data is undefined on boundary edges of the junior
    triangle."""
