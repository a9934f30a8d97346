"""
Breadth-first closure of a set of generators under a monoid product.

Works for any hashable element type given a product function; the diagram
monoid uses concat with alpha discarded.
"""

from collections import deque
from typing import Callable, Hashable, Iterable, List, Optional, TypeVar

from tqdm import tqdm

from config import settings
from errors import ClosureCapError, DimensionMismatchError
from observability import get_logger, metrics

from .diagram import Diagram, concat

logger = get_logger(__name__)

E = TypeVar('E', bound=Hashable)


def monoid_closure(identity: E, generators: Iterable[E], product: Callable[[E, E], E],
                   cap: Optional[int] = None, progress: bool = False, label: str = 'closure') -> List[E]:
    """
    All products of generators, identity included, in discovery order.

    Every element is reached as x * g with x already found, so the FIFO
    frontier visits each element once.

    Raises:
        ClosureCapError: more than cap elements were produced
    """
    cap = cap or settings.enumeration.closure_cap
    generators = list(dict.fromkeys(generators))
    seen = {identity}
    found = [identity]
    frontier = deque([identity])

    with tqdm(desc=label, unit='elem', disable=not progress) as bar:
        while frontier:
            current = frontier.popleft()
            for gen in generators:
                element = product(current, gen)
                if element in seen:
                    continue
                seen.add(element)
                found.append(element)
                frontier.append(element)
                bar.update(1)
                if len(found) > cap:
                    raise ClosureCapError(
                        f"Closure exceeded {cap} elements",
                        details={'label': label, 'cap': cap}
                    )

    metrics.gauge('closure_size', len(found), tags={'label': label})
    logger.debug("Closure complete", extra={'dimension': len(found)})
    return found


def closure(generators: List[Diagram], n: Optional[int] = None, cap: Optional[int] = None,
            progress: bool = False) -> List[Diagram]:
    """
    Submonoid of the partition monoid generated by diagrams.

    Args:
        generators: Diagrams of a common degree
        n: Degree, required when generators is empty
        cap: Element cap (settings.enumeration.closure_cap by default)
        progress: Show a progress bar
    """
    if not generators and n is None:
        raise ValueError("closure of no generators needs n")
    degree = n if n is not None else generators[0].n
    for gen in generators:
        if gen.n != degree:
            raise DimensionMismatchError(degree, gen.n)
    return monoid_closure(Diagram.identity(degree), generators,
                          lambda x, y: concat(x, y).diagram, cap=cap, progress=progress,
                          label=f'diagram closure n={degree}')
