import random
from pathlib import Path
from typing import Callable, Tuple

import pytest

from sheaf_homology import files
from sheaf_homology.poset import FinitePoset
from sheaf_homology.schema import parse
from sheaf_homology.sheaf import Sheaf, constant_sheaf, free_sheaf, sections_morphism
from sheaf_homology.zlinalg import FgAbGroup

GOLDEN = Path(__file__).parent / "golden"

Z = FgAbGroup.free(1)


def load(space: str, sheaf: str = None) -> Tuple[str, FinitePoset, Sheaf]:
    """A bundled space, with a bundled sheaf or the constant sheaf Z."""
    space_path, space_text = files.resolve(space)
    if sheaf is None:
        name, p, _ = parse(space_path, space_text=space_text)
        return name, p, constant_sheaf(p, Z)
    sheaf_path, sheaf_text = files.resolve(sheaf)
    return parse(space_path, sheaf_path, space_text, sheaf_text)


@pytest.fixture(autouse=True)
def isolated_config(monkeypatch, tmp_path):
    """No user configuration and no project pyproject.toml leak into a test."""
    monkeypatch.setattr(files, "find_user_config", lambda: None)
    monkeypatch.chdir(tmp_path)
    (tmp_path / ".git").mkdir()
    files.find_project_root.cache_clear()
    yield
    files.find_project_root.cache_clear()


@pytest.fixture
def s1():
    return load("s1")[1]


@pytest.fixture
def s2():
    return load("s2")[1]


@pytest.fixture
def sierpinski():
    return load("sierpinski")[1]


@pytest.fixture
def twisted():
    return load("s1", "twisted_s1")[2]


@pytest.fixture
def random7():
    return load("random7", "random7_sheaf")[2]


def random_poset(rng: random.Random, n: int, density: float = 0.4) -> FinitePoset:
    """Covers only go from a lower to a higher level, so the result is a
    Hasse diagram without further checking."""
    levels = [[] for _ in range(3)]
    for i in range(n):
        levels[min(i * 3 // n, 2)].append(f"p{i}")
    covers = set()
    for lower, upper in zip(levels, levels[1:]):
        for y in upper:
            below = [x for x in lower if rng.random() < density] or [rng.choice(lower)]
            covers.update((x, y) for x in below)
    elements = [x for level in levels for x in level]
    return FinitePoset.build(elements, covers)


def random_sheaf(rng: random.Random, p: FinitePoset, torsion: bool = True) -> Sheaf:
    """A random quotient or sub-sheaf of a free sheaf ⊕ ℤ_{U_a}.

    The cover maps of a free sheaf are coordinate inclusions, so maps compose
    to nonzero maps along every chain above an anchor. With `torsion` each of
    at most two generators is killed by 2, 3 or 4 and one more local section
    is divided out: every stalk is finite of order at most 16. Without it the
    result is spanned by multiples of the generators and one random section,
    so every stalk is free.
    """
    elements = list(p.elements)
    anchors = [rng.choice(elements) for _ in range(rng.randint(1, 2 if torsion else 3))]
    free = free_sheaf(p, anchors)
    sections = []
    for j, a in enumerate(anchors):
        below = [i for i, b in enumerate(anchors) if p.le(b, a)]
        vector = [0] * len(below)
        vector[below.index(j)] = rng.randint(2, 4) if torsion else rng.randint(1, 2)
        sections.append((a, vector))
    x = rng.choice(elements)
    sections.append((x, [rng.randint(-2, 2) for _ in range(free.stalk(x).ngens)]))

    morphism = sections_morphism(free, sections)
    quotient_or_image = morphism.cokernel() if torsion else morphism.image()
    return quotient_or_image[0]


@pytest.fixture
def make_random() -> Callable[..., Tuple[FinitePoset, Sheaf]]:
    def make(seed: int, torsion: bool = True) -> Tuple[FinitePoset, Sheaf]:
        rng = random.Random(seed)
        p = random_poset(rng, rng.randint(4, 7))
        return p, random_sheaf(rng, p, torsion)

    return make
