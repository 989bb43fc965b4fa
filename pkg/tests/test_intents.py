import pytest
from hypothesis import given, strategies as st

from braillepad.intents import Intent, InvalidTime, TimeOfDay, parse_intent, parse_time


@pytest.mark.parametrize("raw,expected", [
    ("17:30", (17, 30)),
    ("9 pm", (21, 0)),
    ("9pm", (21, 0)),
    ("9:15 pm", (21, 15)),
    ("12 am", (0, 0)),
    ("12 pm", (12, 0)),
    ("0", (0, 0)),
    ("7", (7, 0)),
    ("23", (23, 0)),
    ("21 00", (21, 0)),
    ("17 30", (17, 30)),
    (" 8:05 ", (8, 5)),
    ("11:59 PM", (23, 59)),
])
def test_parse_time_valid(raw, expected):
    tod = parse_time(raw)
    assert (tod.hour, tod.minute) == expected


@pytest.mark.parametrize("raw", [
    "25:00", "9:65", "24", "13 pm", "0 pm", "", "noon", "9:", "9:3:2", "at 9",
])
def test_parse_time_invalid(raw):
    with pytest.raises(InvalidTime):
        parse_time(raw)


@given(st.text(max_size=12))
def test_parse_time_never_crashes(s):
    try:
        tod = parse_time(s)
    except InvalidTime:
        return
    assert 0 <= tod.hour <= 23 and 0 <= tod.minute <= 59


def test_reminder_example():
    intent, tod = parse_intent("remind me to buy milk at 17:30")
    assert intent == Intent("reminder", "to buy milk")
    assert tod == TimeOfDay(17, 30)


def test_call_example():
    intent, tod = parse_intent("call mom at 9 pm")
    assert intent == Intent("call", "mom")
    assert tod == TimeOfDay(21, 0)


def test_plain_note():
    assert parse_intent("hello world") is None


def test_case_and_leading_whitespace():
    intent, tod = parse_intent("  Remind ME take pills at 21 00")
    assert intent == Intent("reminder", "take pills")
    assert tod == TimeOfDay(21, 0)


def test_keyword_must_be_a_word():
    assert parse_intent("callie at 9") is None
    assert parse_intent("reminder at 9") is None


def test_keyword_mid_note_does_not_count():
    assert parse_intent("note to call mom at 9") is None


def test_last_at_wins():
    intent, tod = parse_intent("remind me lunch at 12:00 at 13:00")
    assert tod == TimeOfDay(13, 0)
    assert intent.text == "lunch at 12:00"


def test_retargeting_by_appending_at():
    base = "remind me water plants at 8"
    intent, tod = parse_intent(base + " at 17:30")
    assert tod == TimeOfDay(17, 30)
    assert intent.text == "water plants at 8"


def test_trailing_words_after_time_spoil_the_clause():
    # the suffix after " at " must be a time on its own
    assert parse_intent("remind me dinner at 19:00 at the table") is None
    intent, tod = parse_intent("remind me dinner at the table at 19:00")
    assert tod == TimeOfDay(19, 0)
    assert intent.text == "dinner at the table"


def test_missing_time_is_plain_note():
    assert parse_intent("remind me something") is None
    assert parse_intent("remind me lunch at noonish") is None


def test_empty_message_is_plain_note():
    assert parse_intent("remind me at 17:30") is None
    assert parse_intent("call at 9") is None


@given(st.text(alphabet="abcdefghij ,.", max_size=30))
def test_prefix_safety(s):
    head = s.lstrip().lower()
    if not (head.startswith("remind me") or head.startswith("call")):
        assert parse_intent(s) is None
