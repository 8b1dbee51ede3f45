"""The stock guard: merge-then-check-then-apply, all or nothing."""

import pytest

from plusshop.errors import InsufficientStock, UnknownItem, ValidationError
from plusshop.inventory import (
    check_consume,
    consume_stock,
    merge_lines,
    receive_stock,
    stock_available,
    stock_level,
)
from plusshop.master import add_item


def test_merge_lines_sums_duplicates():
    assert merge_lines([("FS001", 1), ("MS002", 2), ("FS001", 3)]) == {
        "FS001": 4,
        "MS002": 2,
    }


def test_merge_lines_rejects_nonpositive_qty():
    with pytest.raises(ValidationError):
        merge_lines([("FS001", 0)])
    with pytest.raises(ValidationError):
        merge_lines([("FS001", -2)])


def test_check_consume_unknown_item():
    with pytest.raises(UnknownItem):
        check_consume({"FS001": 5}, [("ZZ999", 1)])


def test_check_consume_insufficient():
    with pytest.raises(InsufficientStock):
        check_consume({"FS001": 5}, [("FS001", 6)])


def test_duplicate_lines_checked_as_a_whole():
    # 3 + 3 > 5 even though each line alone fits
    with pytest.raises(InsufficientStock):
        check_consume({"FS001": 5}, [("FS001", 3), ("FS001", 3)])
    # 3 + 2 == 5 passes
    assert check_consume({"FS001": 5}, [("FS001", 3), ("FS001", 2)]) == {"FS001": 5}


def test_consume_stock_is_pure():
    levels = {"FS001": 5, "MS002": 2}
    updated = consume_stock(levels, [("FS001", 2)])
    assert levels == {"FS001": 5, "MS002": 2}
    assert updated == {"FS001": 3, "MS002": 2}


def test_failed_consume_changes_nothing():
    levels = {"FS001": 5, "MS002": 1}
    with pytest.raises(InsufficientStock):
        consume_stock(levels, [("FS001", 2), ("MS002", 9)])
    assert levels == {"FS001": 5, "MS002": 1}


def test_receive_stock_pure_and_guarded():
    levels = {"FS001": 5}
    assert receive_stock(levels, "FS001", 7) == {"FS001": 12}
    assert levels == {"FS001": 5}
    with pytest.raises(UnknownItem):
        receive_stock(levels, "ZZ999", 1)
    with pytest.raises(ValidationError):
        receive_stock(levels, "FS001", 0)


def test_stock_queries(store):
    add_item(store, "FS", "Flashdisk 128", 50000, initial_qty=4)
    assert store.read(lambda s: stock_level(s, "FS001")) == 4
    assert store.read(lambda s: stock_available(s, "FS001", 4)) is True
    assert store.read(lambda s: stock_available(s, "FS001", 5)) is False
    with pytest.raises(UnknownItem):
        store.read(lambda s: stock_level(s, "FS999"))
