from hypothesis import strategies as st

from confirmation import ContingencyTable


def tables(min_cell=0, max_cell=200):
    cell = st.integers(min_cell, max_cell)
    return (
        st.tuples(cell, cell, cell, cell)
        .filter(lambda cells: sum(cells) > 0)
        .map(lambda cells: ContingencyTable(*cells))
    )


positive_tables = tables(min_cell=1)
