"""Numeration and navigation for the metallic trees spanning {p,4} and {p+2,3}.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports it under stable names.  Codes are plain digit strings (most
significant digit first) and values are ordinary Python integers, e.g.::

    >>> import metallic_trees as mt
    >>> mt.encode(5, 26)
    '1012'
    >>> mt.decode(5, '1012')
    26
    >>> mt.father(5, 'white', '1012')
    '102'
"""

from ._core import (
    add,
    black_to_white_number,
    classify,
    compare,
    complement,
    decode,
    decomposition_vectors,
    decrement,
    encode,
    father,
    increment,
    is_canonical,
    level_of,
    neighbors,
    normalize,
    path,
    preferred_son,
    render_dot,
    render_svg,
    seq_M,
    seq_b,
    seq_m,
    sons_word,
    subtract,
    successor,
    verify,
)

__all__ = [
    "add",
    "black_to_white_number",
    "classify",
    "compare",
    "complement",
    "decode",
    "decomposition_vectors",
    "decrement",
    "encode",
    "father",
    "increment",
    "is_canonical",
    "level_of",
    "neighbors",
    "normalize",
    "path",
    "preferred_son",
    "render_dot",
    "render_svg",
    "seq_M",
    "seq_b",
    "seq_m",
    "sons_word",
    "subtract",
    "successor",
    "verify",
]
