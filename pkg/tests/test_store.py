import pytest
from hypothesis import given, strategies as st

from braillepad.codec import CHARSET
from braillepad.store import AlreadyExists, EmptyName, NotFound, NoteStore, sanitize_name


@pytest.fixture
def store(tmp_path):
    return NoteStore(tmp_path / "notes")


def test_sanitize_examples():
    assert sanitize_name("My Note!") == "my_note_"
    assert sanitize_name("todo") == "todo"
    with pytest.raises(EmptyName):
        sanitize_name("  ")


def test_sanitize_truncates():
    assert len(sanitize_name("x" * 200)) == 64


@given(st.text(max_size=100))
def test_sanitize_idempotent(raw):
    try:
        once = sanitize_name(raw)
    except EmptyName:
        return
    assert sanitize_name(once) == once
    assert once
    assert all(c.islower() or c.isdigit() or c in "_-" for c in once)


def test_save_load_roundtrip(store):
    store.save("greeting", "hi")
    assert store.load("greeting") == "hi"


def test_save_collision(store):
    store.save("greeting", "hi")
    with pytest.raises(AlreadyExists):
        store.save("greeting", "hi")


def test_overwrite(store):
    store.save("greeting", "hi")
    store.save("greeting", "hello", overwrite=True)
    assert store.load("greeting") == "hello"


def test_load_missing(store):
    with pytest.raises(NotFound):
        store.load("missing")


def test_list_empty(store):
    assert store.list() == []


def test_list_sorted_and_filtered(store):
    store.save("b", "2")
    store.save("a", "1")
    (store.directory / "x.txt").write_text("ignored")
    assert store.list() == ["a", "b"]


def test_exact_bytes(store, tmp_path):
    store.save("n", "hi")
    assert (store.directory / "n.note").read_bytes() == b"hi"


@given(st.text(alphabet=sorted(CHARSET), max_size=80))
def test_roundtrip_property(tmp_path_factory, content):
    store = NoteStore(tmp_path_factory.mktemp("notes"))
    store.save("n", content)
    assert store.load("n") == content
