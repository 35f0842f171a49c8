"""Exception types shared across the package.

All input-validation failures derive from :class:`InputError` so callers (and
the command line front end, which maps them to exit code 2) can catch one
type.  Negative answers to well-posed questions are return values, never
exceptions.
"""


class InputError(Exception):
    """Base class for rejected inputs."""


class EmptyGraph(InputError):
    """The graph has no vertices."""


class NotSimple(InputError):
    """Adjacency has a loop, a repeated edge, or is not symmetric."""


class NotConnected(InputError):
    """The graph is not connected."""


class InvalidSize(InputError):
    """A size parameter is out of range for the requested constructor."""


class ParameterError(InputError):
    """A numeric parameter violates its documented range."""


class DimensionMismatch(InputError):
    """Lattice points of different dimensions were mixed."""


class TooManyRays(InputError):
    """More rays were requested than the dimension supports (2 per axis)."""


class PointInSet(InputError):
    """The extension point already belongs to the domain set."""


class NotBipartite(InputError):
    """The graph admits no 2-colouring.

    ``odd_walk`` is a closed walk of odd length witnessing the failure.
    """

    def __init__(self, odd_walk):
        self.odd_walk = tuple(odd_walk)
        super().__init__(f"graph is not bipartite; odd closed walk {self.odd_walk}")


class NotLipschitzInput(InputError):
    """A map required to be t-Lipschitz is not.

    Carries the first violating pair and the two distances.
    """

    def __init__(self, pair, d_domain, d_target, t):
        self.pair = pair
        self.d_domain = d_domain
        self.d_target = d_target
        self.t = t
        super().__init__(
            f"map is not {t}-Lipschitz: pair {pair} has domain distance "
            f"{d_domain} but target distance {d_target}"
        )


class NotAViolation(InputError):
    """A certificate failed re-validation."""


class TooLarge(InputError):
    """A brute-force search space exceeds the safety guard."""


class IncompleteAssignment(InputError):
    """A boundary assignment misses some boundary points."""


class NotHomomorphism(InputError):
    """An assignment maps some domain edge to a non-edge.

    Carries the offending domain edge.
    """

    def __init__(self, edge, images):
        self.edge = edge
        self.images = images
        super().__init__(f"edge {edge} maps to non-adjacent pair {images}")


class ParityMismatch(InputError):
    """An assignment does not map lattice parity classes into partite classes."""


class FormatError(InputError):
    """A text file does not follow the documented format."""
