"""The fixed Swahili syllable inventory and longest-prefix matching.

Swahili orthography admits a closed set of syllables: the five bare
vowels, seven consonants that may stand alone as syllabic segments, and
consonant clusters completed by exactly one final vowel. The tokenizer
never invents units outside this set, so the whole inventory is embedded
here as data. An override file can replace it for experiments with
trimmed or extended charts.

Entries are plain strings. Canonical order is the row-major order of the
chart below, after dropping placeholders and collapsing duplicates; that
order fixes token ids everywhere else in the package, so it must never
be reshuffled.
"""

from __future__ import annotations

import unicodedata
from typing import Iterable, Optional

from .errors import MalformedEntry, PlaceholderInData

# Canonical apostrophe used after normalization. Chart sources typeset
# the velar nasal with U+2019 while corpora use either that or U+0027;
# both map to U+0027 before any matching.
APOSTROPHE = "'"

VOWELS = frozenset("aeiou")
STANDALONE_CONSONANTS = frozenset("bdfkmns")
# Swahili alphabet: no q, no x. c only ever appears inside the ch digraph.
ALPHABET = frozenset("abcdefghijklmnoprstuvwyz")

# The syllable chart, row-major. Kept verbatim from the circulating
# printing except for one correction: that printing drops "tu" from the
# ta te ti to series (its t row is one cell short), which would make
# everyday words like "mtu" unsegmentable, so "tu" is restored in place.
# The printing also repeats "vu" and pads the last row with "-"
# placeholders; the loader collapses the duplicate and drops the
# placeholders, which is how a 219-cell chart resolves to 218 entries.
_CHART = """
mbwa mbwe mbwi ndwa ndwe ndwi ngwa ngwe ngwi njwa njwe njwi nywa
nywe shwa shwe shwi chwa chwe chwi pwa pwe pwi pwo swa swe
swi twa twe twi zwa zwe zwi cha che chi cho chu dha
dhe dhi dho dhu gha ghe ghi gho ghu kha khe kho khu
mba mbe mbi mbo mbu nda nde ndi ndo ndu nga nge ngi
ngo ngu ng’a ng’e ng’o nja nje nji njo nju nya nye nyi
nyo nyu sha she shi sho shu tha the thi tho thu vya
vye vyo bwa bwe bwi gwa gwe gwi jwa jwe jwi kwa kwe
kwi lwa lwe lwi mwa mwe mwi nza nze nzi nzo nzu ba
be bi bo bu da de di do du fa fe fi fo
fu ga ge gi go gu ha he hi ho hu ja je
ji jo ju ka ke ki ko ku la le li lo lu
ma me mi mo mu na ne ni no nu pa pe pi
po pu ra re ri ro ru sa se si so su ta
te ti to tu va ve vi vo vu wa we wi wo
wu ya ye yi yo yu vu za ze zi zo zu a
e i o u b d f k m n s - -
"""

PLACEHOLDER = "-"

# Resolved entry count, pinned. 219 is the count usually quoted for the
# chart; it includes the repeated "vu" cell that dedup removes.
INVENTORY_SIZE = 218
CITED_CHART_SIZE = 219


def canonicalize(text: str) -> str:
    """Map raw entry text to canonical form: NFC, lowercase, U+0027."""
    return unicodedata.normalize("NFC", text).lower().replace("’", APOSTROPHE)


def validate_entry(raw: str) -> str:
    """Canonicalize one inventory entry and check the syllable shape.

    A valid entry is either a bare vowel, one of the standalone
    consonants, or a consonant cluster whose single vowel is its final
    character. Raises MalformedEntry otherwise.
    """
    entry = canonicalize(raw)
    if not entry:
        raise MalformedEntry("empty inventory entry")
    stray = set(entry) - ALPHABET - {APOSTROPHE}
    if stray:
        raise MalformedEntry(
            f"entry {raw!r} uses characters outside the alphabet: {sorted(stray)!r}"
        )
    if len(entry) > 5:
        raise MalformedEntry(f"entry {raw!r} is longer than any admitted shape")
    vowel_at = [i for i, ch in enumerate(entry) if ch in VOWELS]
    if not vowel_at:
        if entry not in STANDALONE_CONSONANTS:
            raise MalformedEntry(
                f"vowelless entry {raw!r} is not a standalone consonant"
            )
    elif len(vowel_at) > 1:
        raise MalformedEntry(f"entry {raw!r} contains more than one vowel")
    elif vowel_at[0] != len(entry) - 1:
        raise MalformedEntry(f"entry {raw!r} does not end in its vowel")
    return entry


class SyllableInventory:
    """Ordered, duplicate-free syllable set with longest-prefix lookup."""

    def __init__(self, entries: Iterable[str]):
        seen = set()
        resolved = []
        for raw in entries:
            entry = validate_entry(raw)
            if entry in seen:
                continue
            seen.add(entry)
            resolved.append(entry)
        if not resolved:
            raise MalformedEntry("inventory resolved to zero entries")
        self.entries: tuple[str, ...] = tuple(resolved)
        self._positions = {entry: i for i, entry in enumerate(self.entries)}
        # Buckets by length, longest first, drive prefix matching. The
        # chart tops out at four characters so the scan is constant work.
        max_len = max(len(entry) for entry in self.entries)
        self._buckets: tuple[tuple[int, frozenset[str]], ...] = tuple(
            (length, frozenset(e for e in self.entries if len(e) == length))
            for length in range(max_len, 0, -1)
        )

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __contains__(self, entry: object) -> bool:
        return entry in self._positions

    def __repr__(self) -> str:
        return f"SyllableInventory({len(self.entries)} entries)"

    def index_of(self, entry: str) -> int:
        """Canonical position of an entry; raises KeyError if absent."""
        return self._positions[entry]

    def buckets(self) -> tuple[tuple[int, frozenset[str]], ...]:
        """(length, members) pairs in decreasing length order."""
        return self._buckets

    def longest_prefix_match(self, text: str) -> Optional[tuple[str, int]]:
        """Longest inventory entry that prefixes text.

        Returns (entry, length) where length counts characters of the
        canonical form, or None when no entry matches. Matching is exact
        on already-normalized text; callers normalize first.
        """
        for length, members in self._buckets:
            if length <= len(text) and text[:length] in members:
                return text[:length], length
        return None


def longest_prefix_match(
    inventory: SyllableInventory, text: str
) -> Optional[tuple[str, int]]:
    """Module-level convenience for SyllableInventory.longest_prefix_match."""
    return inventory.longest_prefix_match(text)


def _chart_entries() -> list[str]:
    return [cell for cell in _CHART.split() if cell != PLACEHOLDER]


def load_inventory(path: Optional[str] = None) -> SyllableInventory:
    """Load the embedded chart, or an override file when path is given.

    Override files carry one syllable per line; blank lines and '#'
    comments are ignored. A literal '-' in an override raises
    PlaceholderInData since hand-written lists should not carry chart
    padding. I/O failures propagate as OSError.
    """
    if path is None:
        return SyllableInventory(_chart_entries())
    raws = []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            cell = line.split("#", 1)[0].strip()
            if not cell:
                continue
            if cell == PLACEHOLDER:
                raise PlaceholderInData(
                    f"{path}:{lineno}: placeholder '-' in override inventory"
                )
            raws.append(cell)
    return SyllableInventory(raws)
