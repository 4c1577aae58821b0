import typing

try:
    from typing import NotRequired  # type: ignore
except ImportError:
    from typing_extensions import NotRequired


class RunOptions(typing.TypedDict, total=False):
    """
    Per-call overrides for the randomized and retrying operations.
    Passed as the optional final ``options`` argument.

    Attributes:
        - seed: int. Seed of every pseudo-random choice made by the call.

        - samples: int. Number of random samples drawn by cross-checks.

        - max_ray_retries: int. Ray directions tried by a winding number computation before giving up.
    """

    seed: NotRequired[int]
    samples: NotRequired[int]
    max_ray_retries: NotRequired[int]
