import pytest
from hypothesis import given, settings, strategies as st

from arbora.errors import (
    AlphabetMismatch,
    ArityTooSmall,
    EmptyWord,
    MalformedToken,
    UnknownGenerator,
)
from arbora.words import (
    Alphabet,
    Letter,
    SignPure,
    Word,
    canonical_names,
    commutator,
    concat,
    cyclic_normalize,
    empty_word,
    exponent_total,
    exponent_vector,
    format_word,
    free_reduce,
    invert,
    parse_word,
)

A3 = Alphabet(3)
A4 = Alphabet(4)


@st.composite
def words(draw, d=3, max_len=12):
    alphabet = Alphabet(d)
    pool = [i for i in range(1, d + 1)] + [-i for i in range(1, d + 1)]
    raw = draw(st.lists(st.sampled_from(pool), max_size=max_len))
    return Word(alphabet, tuple(raw))


def test_alphabet_rejects_small_arity():
    with pytest.raises(ArityTooSmall):
        Alphabet(2)


def test_letter_roundtrip():
    l = Letter.from_int(-2)
    assert l.index == 2 and l.sign == -1
    assert l.to_int() == -2
    assert Letter.from_int(3).to_int() == 3


def test_free_reduction_on_construction():
    assert Word(A3, (1, -1, 2)).letters == (2,)
    assert Word(A3, (1, 2, -2, -1, 3)).letters == (3,)
    assert Word(A3, ()).letters == ()


def test_word_rejects_foreign_letters():
    with pytest.raises(UnknownGenerator):
        Word(A3, (4,))
    with pytest.raises(UnknownGenerator):
        Word(A3, (0,))


def test_invert_and_concat():
    w = Word(A3, (1, 2))
    assert invert(w).letters == (-2, -1)
    assert concat(w, Word(A3, (-2, 3))).letters == (1, 3)
    assert (w * ~w).letters == ()


def test_concat_rejects_mixed_arities():
    with pytest.raises(AlphabetMismatch):
        concat(Word(A3, (1,)), Word(A4, (1,)))


def test_power():
    ab = Word(A3, (1, 2))
    assert (ab**2).letters == (1, 2, 1, 2)
    assert (ab**-1).letters == (-2, -1)
    assert (ab**0).letters == ()


def test_conjugated():
    a, b = Word(A3, (1,)), Word(A3, (2,))
    assert a.conjugated(b).letters == (-2, 1, 2)


def test_commutator():
    a, b = Word(A3, (1,)), Word(A3, (2,))
    assert commutator(a, b).letters == (-1, -2, 1, 2)


def test_exponent_vector_and_total():
    w = Word(A3, (1, 1, -2))
    assert exponent_vector(w) == (2, -1, 0)
    assert exponent_total(w) == 1
    assert exponent_vector(empty_word(A3)) == (0, 0, 0)


def test_cyclic_normalize_rotates_to_trailing_pair():
    out = cyclic_normalize(Word(A3, (1, -2)))
    assert isinstance(out, Word) and out.letters == (-2, 1)
    # matched outer letters peel off cyclically before the rotation
    out = cyclic_normalize(Word(A3, (-1, 2, -3, 1)))
    assert isinstance(out, Word) and out.letters == (-3, 2)
    # rotation of a longer word with no cyclic cancellation
    out = cyclic_normalize(Word(A3, (-1, 2, -3, 2)))
    assert isinstance(out, Word) and out.letters == (-3, 2, -1, 2)


def test_cyclic_normalize_sign_pure():
    out = cyclic_normalize(Word(A3, (1, 1, 2)))
    assert isinstance(out, SignPure)
    assert out.core.letters == (1, 1, 2) and out.sign == 1
    # mixed input whose cyclic reduction is one-signed
    out = cyclic_normalize(Word(A3, (-2, 1, 2)))
    assert isinstance(out, SignPure)
    assert out.core.letters == (1,)
    out = cyclic_normalize(Word(A3, (-1, -2)))
    assert out.sign == -1


def test_cyclic_normalize_empty():
    with pytest.raises(EmptyWord):
        cyclic_normalize(Word(A3, (2, -2)))


def test_parse_basic():
    assert parse_word("a b' c^3", A3).letters == (1, -2, 3, 3, 3)
    assert parse_word("a1 a2'", A4).letters == (1, -2)
    assert parse_word("e", A3).letters == ()
    assert parse_word("", A3).letters == ()
    assert parse_word("a a'", A3).letters == ()
    assert parse_word("a'^2", A3).letters == (-1, -1)
    assert parse_word("a^-2", A3).letters == (-1, -1)
    assert parse_word("a1 a2 a3", A3).letters == (1, 2, 3)


def test_parse_custom_names():
    assert parse_word("x y'", A3, {"x": 1, "y": 3}).letters == (1, -3)
    with pytest.raises(UnknownGenerator):
        parse_word("a", A3, {"x": 1})


def test_parse_errors():
    with pytest.raises(UnknownGenerator):
        parse_word("x", A3)
    with pytest.raises(UnknownGenerator):
        parse_word("a", A4)  # single-letter aliases only exist at arity 3
    with pytest.raises(MalformedToken):
        parse_word("a^x", A3)
    with pytest.raises(MalformedToken):
        parse_word("a'b", A3)
    with pytest.raises(MalformedToken):
        parse_word("a^2^3", A3)
    with pytest.raises(MalformedToken):
        parse_word("^3", A3)
    with pytest.raises(MalformedToken):
        parse_word("a^4294967297", A3)


def test_format_word():
    assert format_word(Word(A3, (1, -2, 3))) == "a b' c"
    assert format_word(Word(A3, ())) == "e"
    assert format_word(Word(A4, (4, -1))) == "a4 a1'"
    assert format_word(Word(A3, (1,)), ("x", "y", "z")) == "x"
    assert str(Word(A3, (-3,))) == "c'"


def test_canonical_names():
    assert canonical_names(A3) == ("a", "b", "c")
    assert canonical_names(A4) == ("a1", "a2", "a3", "a4")


@given(words())
@settings(max_examples=80)
def test_reduction_is_a_fixed_point(w):
    assert Word(w.alphabet, w.letters).letters == w.letters
    for x, y in zip(w.letters, w.letters[1:]):
        assert x != -y


@given(words(), words(), words())
@settings(max_examples=60)
def test_concat_associative(u, v, w):
    assert concat(concat(u, v), w) == concat(u, concat(v, w))


@given(words())
@settings(max_examples=60)
def test_invert_involution(w):
    assert invert(invert(w)) == w
    assert concat(w, invert(w)).letters == ()


@given(words(), words())
@settings(max_examples=60)
def test_exponent_vector_additive(u, v):
    joined = exponent_vector(concat(u, v))
    assert joined == tuple(
        x + y for x, y in zip(exponent_vector(u), exponent_vector(v))
    )


@given(words(d=3), words(d=5))
@settings(max_examples=40)
def test_parse_format_roundtrip(u, v):
    assert parse_word(format_word(u), u.alphabet) == u
    assert parse_word(format_word(v), v.alphabet) == v


@given(words(max_len=10))
@settings(max_examples=80)
def test_cyclic_normalize_preserves_counts(w):
    if not w.letters:
        return
    out = cyclic_normalize(w)
    core = out.core if isinstance(out, SignPure) else out
    assert exponent_vector(core) == exponent_vector(w)
    if isinstance(out, Word):
        assert out.letters[-2] < 0 < out.letters[-1]


def test_free_reduce_helper():
    assert free_reduce(A3, [1, -1]).letters == ()
    assert free_reduce(A3, [1, 2]) == Word(A3, (1, 2))
