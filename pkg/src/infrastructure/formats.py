"""
Profile File Formats
Reading and writing strict complete rankings.

preflib-soc (PrefLib "strict orders, complete"):

    # DATA TYPE: soc
    # NUMBER ALTERNATIVES: 3
    # ALTERNATIVE NAME 1: a
    # ALTERNATIVE NAME 2: b
    # ALTERNATIVE NAME 3: c
    3: 2,1,3
    1: 1,2,3

native-lines, one ballot per line with an optional multiplier:

    # proposals: a, b, c
    2x a>b>c
    c>b>a

Ballots expand to agents with sequential ids from 0, in file order.
"""
import logging
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..model.errors import ProfileInputError, ProfileParseError
from ..model.profile import Profile, ProposalSet, Ranking

logger = logging.getLogger(__name__)

SOC = 'preflib-soc'
LINES = 'native-lines'

FORMAT_ALIASES = {
    'soc': SOC,
    'preflib-soc': SOC,
    'preflib': SOC,
    'lines': LINES,
    'native-lines': LINES,
    'native': LINES,
}

_SOC_HEADER = re.compile(r'^#\s*([A-Z ]+?)\s*(\d+)?\s*:\s*(.*)$')
_SOC_BALLOT = re.compile(r'^(\d+)\s*:\s*(.+)$')
_MULTIPLIER = re.compile(r'^(\d+)\s*[x*]\s+(\S.*)$')


def resolve_format(name: str) -> str:
    try:
        return FORMAT_ALIASES[name.strip().lower()]
    except KeyError:
        raise ProfileInputError(f"unknown profile format {name!r} (expected soc or lines)") from None


def guess_format(path: str) -> str:
    return SOC if path.lower().endswith('.soc') else LINES


@dataclass
class ProfileDocument:
    profile: Profile
    format: str
    source: Optional[str] = None
    title: Optional[str] = None
    metadata: Dict[str, str] = field(default_factory=dict)

    @property
    def proposal_names(self) -> Tuple[str, ...]:
        return self.profile.proposals.names


def _text(data: Union[bytes, str]) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode('utf-8-sig')
        except UnicodeDecodeError as e:
            raise ProfileParseError(f"profile is not UTF-8: {e}") from None
    return data


def _check_ballot(indices: Sequence[int], m: int, line_number: int) -> Ranking:
    seen = set()
    for x in indices:
        if x in seen:
            raise ProfileParseError("proposal listed twice in ballot", line_number)
        seen.add(x)
    if len(seen) != m:
        raise ProfileParseError(f"ballot ranks {len(seen)} of {m} proposals; complete strict orders only", line_number)
    return Ranking(tuple(indices))


def _count(raw: str, line_number: int) -> int:
    count = int(raw)
    if count < 1:
        raise ProfileParseError(f"ballot count must be positive, got {count}", line_number)
    return count


# ---------------------------------------------------------------------------
# preflib-soc
# ---------------------------------------------------------------------------

def _parse_soc(text: str) -> Tuple[Profile, Optional[str], Dict[str, str]]:
    metadata: Dict[str, str] = {}
    names: Dict[int, str] = {}
    declared_m: Optional[int] = None
    ballots: List[Tuple[int, Ranking]] = []
    proposals: Optional[ProposalSet] = None

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith('#'):
            header = _SOC_HEADER.match(line)
            if not header:
                continue
            key, number, value = header.group(1).strip(), header.group(2), header.group(3).strip()
            if key == 'ALTERNATIVE NAME' and number:
                names[int(number)] = value
            elif key == 'NUMBER ALTERNATIVES':
                declared_m = int(value)
            elif key == 'DATA TYPE' and value.lower() != 'soc':
                raise ProfileParseError(f"data type {value!r} is not supported; only soc (strict complete orders)", line_number)
            else:
                metadata[key.lower()] = value
            continue

        ballot = _SOC_BALLOT.match(line)
        if not ballot:
            raise ProfileParseError(f"expected 'count: i,j,k', got {line!r}", line_number)
        body = ballot.group(2)
        if '{' in body or '}' in body:
            raise ProfileParseError("ties ('{...}') are not supported; only strict orders", line_number)
        if proposals is None:
            m = declared_m or len(body.split(','))
            labels = tuple(names.get(i, str(i)) for i in range(1, m + 1))
            try:
                proposals = ProposalSet(labels)
            except ProfileInputError as e:
                raise ProfileParseError(str(e), line_number) from None
        try:
            indices = [int(tok) - 1 for tok in body.split(',')]
        except ValueError:
            raise ProfileParseError(f"ballot {body!r} is not a list of alternative numbers", line_number) from None
        for x in indices:
            if not 0 <= x < proposals.m:
                raise ProfileParseError(f"unknown alternative {x + 1}", line_number)
        ranking = _check_ballot(indices, proposals.m, line_number)
        ballots.append((_count(ballot.group(1), line_number), ranking))

    if not ballots:
        raise ProfileParseError("no ballots found")
    rankings = [r for count, r in ballots for _ in range(count)]
    return Profile.from_rankings(proposals, rankings), metadata.get('title'), metadata


def _emit_soc(profile: Profile, title: Optional[str]) -> str:
    groups = _consecutive_groups(profile)
    lines = []
    if title:
        lines.append(f"# TITLE: {title}")
    lines += [
        "# DATA TYPE: soc",
        f"# NUMBER ALTERNATIVES: {profile.m}",
        f"# NUMBER VOTERS: {profile.n}",
        f"# NUMBER UNIQUE ORDERS: {len({r.order for r in profile.rankings})}",
    ]
    lines += [f"# ALTERNATIVE NAME {i + 1}: {name}" for i, name in enumerate(profile.proposals.names)]
    lines += [f"{count}: " + ','.join(str(x + 1) for x in ranking.order) for count, ranking in groups]
    return '\n'.join(lines) + '\n'


# ---------------------------------------------------------------------------
# native-lines
# ---------------------------------------------------------------------------

def _tokens(body: str) -> List[str]:
    if '>' in body:
        return [t.strip() for t in body.split('>')]
    return list(body.replace(' ', ''))


def _parse_lines(text: str) -> Tuple[Profile, Optional[str], Dict[str, str]]:
    metadata: Dict[str, str] = {}
    proposals: Optional[ProposalSet] = None
    ballots: List[Tuple[int, Ranking]] = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith('#'):
            key, sep, value = line[1:].partition(':')
            key = key.strip().lower()
            if sep and key == 'proposals':
                if ballots:
                    raise ProfileParseError("'# proposals:' must come before the ballots", line_number)
                labels = [v.strip() for v in value.split(',') if v.strip()]
                try:
                    proposals = ProposalSet.of(labels)
                except ProfileInputError as e:
                    raise ProfileParseError(str(e), line_number) from None
            elif sep:
                metadata[key] = value.strip()
            continue

        multiplied = _MULTIPLIER.match(line)
        count, body = (_count(multiplied.group(1), line_number), multiplied.group(2)) if multiplied else (1, line)
        tokens = _tokens(body)
        if any(not t for t in tokens):
            raise ProfileParseError(f"empty proposal label in {body!r}", line_number)
        if proposals is None:
            # first ballot fixes the proposal order
            if len(set(tokens)) != len(tokens):
                raise ProfileParseError("proposal listed twice in ballot", line_number)
            proposals = ProposalSet.of(tokens)
        indices = []
        for t in tokens:
            try:
                indices.append(proposals.index(t))
            except ProfileInputError:
                raise ProfileParseError(f"unknown proposal {t!r}", line_number) from None
        ballots.append((count, _check_ballot(indices, proposals.m, line_number)))

    if not ballots:
        raise ProfileParseError("no ballots found")
    rankings = [r for count, r in ballots for _ in range(count)]
    return Profile.from_rankings(proposals, rankings), metadata.get('title'), metadata


def _emit_lines(profile: Profile, title: Optional[str]) -> str:
    for name in profile.proposals.names:
        if any(ch in name for ch in ',>#') or name != name.strip():
            raise ProfileInputError(f"proposal label {name!r} cannot be written in the lines format")
    lines = []
    if title:
        lines.append(f"# title: {title}")
    lines.append("# proposals: " + ', '.join(profile.proposals.names))
    for count, ranking in _consecutive_groups(profile):
        body = '>'.join(profile.proposals.names[x] for x in ranking.order)
        lines.append(f"{count}x {body}" if count > 1 else body)
    return '\n'.join(lines) + '\n'


def _consecutive_groups(profile: Profile) -> List[Tuple[int, Ranking]]:
    """Runs of identical consecutive rankings; file order stays agent order."""
    groups: List[Tuple[int, Ranking]] = []
    for ranking in profile.rankings:
        if groups and groups[-1][1] == ranking:
            groups[-1] = (groups[-1][0] + 1, ranking)
        else:
            groups.append((1, ranking))
    return groups


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------

def parse_profile(data: Union[bytes, str], fmt: str = LINES, source: Optional[str] = None) -> ProfileDocument:
    """Parse a profile; errors carry the offending line number."""
    fmt = resolve_format(fmt)
    text = _text(data)
    parser = _parse_soc if fmt == SOC else _parse_lines
    profile, title, metadata = parser(text)
    logger.debug("[Formats] %s: %d agents, %d proposals from %s", fmt, profile.n, profile.m, source or '<memory>')
    return ProfileDocument(profile, fmt, source, title, metadata)


def emit_profile(profile: Profile, fmt: str = LINES, title: Optional[str] = None) -> str:
    fmt = resolve_format(fmt)
    if fmt == SOC:
        return _emit_soc(profile, title)
    return _emit_lines(profile, title)


def read_profile(path: str, fmt: Optional[str] = None) -> ProfileDocument:
    with open(path, 'rb') as f:
        data = f.read()
    return parse_profile(data, fmt or guess_format(path), source=path)


def convert(data: Union[bytes, str], source_fmt: str, target_fmt: str) -> str:
    document = parse_profile(data, source_fmt)
    return emit_profile(document.profile, target_fmt, document.title)
