import itertools


def ids(S, *labels):
    return tuple(S.index_of(lab) for lab in labels)


def brute_associative(table) -> bool:
    n = len(table)
    return all(table[table[x][y]][z] == table[x][table[y][z]]
               for x, y, z in itertools.product(range(n), repeat=3))
