"""Built-in kinship terms dataset.

Fourteen English kinship terms with the percentage of respondents in the
Rosenberg & Kim (1975) sorting study who did not group each pair together,
used here as pairwise dissimilarities. "Cousin" is excluded because its
gender is undefined. Auxiliary codes: gender (1 male, 2 female), kinship
degree (1 nuclear, 2 second degree, 3 third degree), generation (-2
grandparents ... +2 grandchildren) and its absolute value.

The values are compiled in so demos and acceptance tests run offline.
"""

from dataclasses import dataclass

import numpy as np

__all__ = ["KinshipData", "load_kinship", "KINSHIP_VARIABLES"]

KINSHIP_LABELS = (
    "Aunt", "Brother", "Daughter", "Father", "Granddaughter", "Grandfather",
    "Grandmother", "Grandson", "Mother", "Nephew", "Niece", "Sister", "Son",
    "Uncle",
)

_DELTA = (
    (0, 79, 59, 73, 57, 77, 55, 79, 51, 56, 32, 58, 80, 27),
    (79, 0, 62, 38, 75, 57, 80, 51, 63, 53, 76, 28, 38, 57),
    (59, 62, 0, 57, 46, 77, 54, 72, 31, 74, 52, 37, 29, 80),
    (73, 38, 57, 0, 79, 51, 70, 54, 29, 59, 81, 63, 32, 51),
    (57, 75, 46, 79, 0, 57, 32, 29, 56, 74, 51, 50, 72, 80),
    (77, 57, 77, 51, 57, 0, 29, 31, 75, 58, 79, 79, 55, 55),
    (55, 80, 54, 70, 32, 29, 0, 57, 50, 79, 58, 57, 78, 77),
    (79, 51, 72, 54, 29, 31, 57, 0, 79, 51, 74, 75, 47, 58),
    (51, 63, 31, 29, 56, 75, 50, 79, 0, 81, 60, 39, 57, 73),
    (56, 53, 74, 59, 74, 58, 79, 51, 81, 0, 27, 76, 52, 33),
    (32, 76, 52, 81, 51, 79, 58, 74, 60, 27, 0, 53, 74, 56),
    (58, 28, 37, 63, 50, 79, 57, 75, 39, 76, 53, 0, 62, 79),
    (80, 38, 29, 32, 72, 55, 78, 47, 57, 52, 74, 62, 0, 59),
    (27, 57, 80, 51, 80, 55, 77, 58, 73, 33, 56, 79, 59, 0),
)

_GENDER = (2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 2, 1, 1)
_DEGREE = (3, 2, 1, 1, 2, 2, 2, 2, 1, 3, 3, 2, 1, 3)
_GENERATION = (-1, 0, 1, -1, 2, -2, -2, 2, -1, 1, 1, 0, 1, -1)

KINSHIP_VARIABLES = ("gender", "kinship_degree", "generation_difference", "generation")


@dataclass(frozen=True)
class KinshipData:
    """The kinship fixture: labels, dissimilarities and auxiliary codes."""

    labels: tuple
    delta: np.ndarray
    gender: np.ndarray
    kinship_degree: np.ndarray
    generation: np.ndarray
    generation_difference: np.ndarray

    @property
    def n(self):
        return len(self.labels)

    def auxiliary(self, columns=("gender",)):
        """Stack the named conditioning variables into an N x q matrix.

        Valid names: gender, kinship_degree, generation, generation_difference.
        """
        cols = []
        for name in columns:
            if name not in KINSHIP_VARIABLES:
                raise KeyError(
                    f"unknown kinship variable {name!r}; "
                    f"choose from {KINSHIP_VARIABLES}"
                )
            cols.append(getattr(self, name))
        return np.column_stack(cols).astype(float)


def load_kinship():
    """The 14-term kinship dataset with all auxiliary variables."""
    generation = np.asarray(_GENERATION, dtype=float)
    return KinshipData(
        labels=KINSHIP_LABELS,
        delta=np.asarray(_DELTA, dtype=float),
        gender=np.asarray(_GENDER, dtype=float),
        kinship_degree=np.asarray(_DEGREE, dtype=float),
        generation=generation,
        generation_difference=np.abs(generation),
    )
