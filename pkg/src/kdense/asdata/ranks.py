"""kdense/asdata/ranks.py -- Ranked AS lists and overlaps.

Licensed under the terms of the BSD-3-Clause license.

Classes:
    RankedList      AS tokens ordered by score.

Functions:
    load_ranks      Parse a rank file.
    rank_overlap    Size of the intersection with a top-n list.
    top_n_by_metric Highest-scoring ASes.
"""
from dataclasses import dataclass
import pathlib
from typing import Collection, List, Mapping, Optional, Tuple

import pandas as pd

from .. import tools
from .. errors import DomainError
from .. types import PathType


@dataclass(frozen=True)
class RankedList:
    """AS tokens in rank order.

    Attributes:
        entries:      (token, score) pairs with non-increasing scores.
        metric_name:  Name of the ranking metric.
    """
    entries: Tuple[Tuple[str, float], ...]
    metric_name: str = 'score'

    def __post_init__(self) -> None:
        tokens = [tok for tok, _ in self.entries]
        if len(set(tokens)) != len(tokens):
            raise DomainError(f'Ranking {self.metric_name!r} lists an AS '
                              'more than once.')
        scores = [score for _, score in self.entries]
        if any(nxt > prev for prev, nxt in zip(scores, scores[1:])):
            raise DomainError(f'Scores of ranking {self.metric_name!r} must '
                              'be non-increasing.')

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def tokens(self) -> List[str]:
        """Tokens in rank order."""
        return [tok for tok, _ in self.entries]

    def top(self, n: int) -> List[str]:
        """Return the first ``n`` tokens.

        Raises:
            DomainError if ``n`` exceeds the list length.
        """
        if not 0 <= n <= len(self):
            raise DomainError(f'Ranking {self.metric_name!r} has {len(self)} '
                              f'entries, requested {n}.')
        return self.tokens[:n]

    def to_frame(self) -> pd.DataFrame:
        """Return the ranking as data frame with columns rank, as_token,
        score.
        """
        return pd.DataFrame(
            [(i, tok, score) for i, (tok, score) in enumerate(self.entries, 1)],
            columns=['rank', 'as_token', 'score'])


def top_n_by_metric(values: Mapping[str, float], n: int,
                    metric_name: str = 'score') -> RankedList:
    """Return the ``n`` highest-scoring ASes.

    Ties are broken by ascending AS token.

    Raises:
        DomainError if ``n`` exceeds the number of ASes.
    """
    if not 0 <= n <= len(values):
        raise DomainError(f'Cannot rank top {n} of {len(values)} ASes.')
    order = sorted(values.items(),
                   key=lambda item: (-item[1], tools.token_key(item[0])))
    return RankedList(tuple(order[:n]), metric_name)


def rank_overlap(s: Collection[str], ranked: RankedList, top_n: int) -> int:
    """Return the number of ASes in ``s`` among the first ``top_n`` of
    ``ranked``.

    Raises:
        DomainError if ``top_n`` exceeds the list length.
    """
    return len(set(s).intersection(ranked.top(top_n)))


def load_ranks(path: PathType, metric_name: Optional[str] = None) -> RankedList:
    """Parse a CSV file of (rank, as_token, score) rows.

    A header row is optional. Rows are ordered by rank.

    Args:
        path:         Path to rank file.
        metric_name:  Name of the ranking. Defaults to the file stem.

    Returns:
        Ranked list.

    Raises:
        DomainError on malformed rows.
    """
    path = pathlib.Path(path)
    try:
        frame = pd.read_csv(path, comment='#', header=None,
                            names=['rank', 'as_token', 'score'], dtype=str,
                            skipinitialspace=True)
    except pd.errors.ParserError as err:
        raise DomainError(f'Malformed rank file {path}: {err}') from err
    if len(frame) and frame.iloc[0]['rank'] == 'rank':
        frame = frame.iloc[1:]
    try:
        ranks = pd.to_numeric(frame['rank'], errors='raise')
        scores = pd.to_numeric(frame['score'], errors='raise')
    except (ValueError, TypeError) as err:
        raise DomainError(f'Malformed rank file {path}: {err}') from err
    if ranks.isna().any() or scores.isna().any():
        raise DomainError(f'Rank file {path} has incomplete rows.')
    frame = frame.assign(rank=ranks, score=scores).sort_values('rank',
                                                               kind='stable')
    entries = tuple(zip(frame['as_token'].str.strip(),
                        frame['score'].astype(float)))
    return RankedList(entries, metric_name or path.name.split('.')[0])
