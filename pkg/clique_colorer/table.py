def scientific_notation(nb, maxchar):
    nb_char = 6 if nb >= 0 else 7
    operator = "{:." + str(max(maxchar - nb_char, 0)) + "E}"
    return operator.format(nb).replace("E", "e")


def float_strip(nb, maxchar):
    if isinstance(nb, int):
        text = str(nb)
        return text if len(text) <= maxchar else scientific_notation(nb, maxchar)
    if maxchar < 8:
        raise NotImplementedError(
            "Tables does not support column size of less than 8 for floats"
        )
    if nb == 0:
        return "0"
    int_part = "-" if nb < 0 else ""
    int_part += str(abs(int(nb)))
    float_part = abs(nb) - abs(int(nb))
    if len(int_part) > maxchar:
        return scientific_notation(nb, maxchar)
    if len(int_part) >= maxchar - 1:
        return str(int_part)
    float_part = round(float_part, maxchar - len(int_part) - 1)
    if abs(int(nb)) + float_part == 0:
        return scientific_notation(nb, maxchar)
    operator = "{:." + str(maxchar - len(int_part) - 1) + "f}"
    float_part = operator.format(float_part)[1:].rstrip("0").rstrip(".")
    return int_part + float_part


def string_strip(st, maxchar):
    if maxchar < 1:
        raise NotImplementedError(
            "Tables does not support column size of less than 1 for strings"
        )
    if len(st) > maxchar:
        return st[: maxchar - 1] + "…"
    return st


def strip_data(data, maxchar):
    if isinstance(data, bool):
        return string_strip("yes" if data else "no", maxchar)
    if isinstance(data, (float, int)):
        return float_strip(data, maxchar)
    if data is None:
        return string_strip("-", maxchar)
    if isinstance(data, str):
        return string_strip(data, maxchar)
    raise NotImplementedError(f"Cannot handle data of type {type(data)}")


def data_to_exact_size(data, size, add_spaces=True, align="left"):
    data = strip_data(data, size - (2 if add_spaces else 0))
    nb_spaces = size - len(data)
    if align == "center":
        before = " " * (nb_spaces // 2)
        after = " " * (nb_spaces - nb_spaces // 2)
    elif align in ("left", "right"):
        before = " " * int(add_spaces)
        after = " " * (nb_spaces - int(add_spaces))
        if align == "right":
            before, after = after, before
    else:
        raise ValueError("'align' must be either 'center', 'left' or 'right'")
    return before + data + after


def _cell_text(data):
    if isinstance(data, bool):
        return "yes" if data else "no"
    return "-" if data is None else str(data)


def tabularize(heads, rows, sizes=None, add_spaces=True, align="left"):
    """
    Box-drawn table; a size of 0 (or no sizes at all) fits the column to
    its widest cell
    """
    dash = "─"
    sizes = list(sizes) if sizes is not None else [0] * len(heads)
    if not isinstance(align, list):
        align = [align] * len(heads)
    for i, size in enumerate(sizes):
        if size == 0:
            sizes[i] = max([len(_cell_text(row[i])) for row in rows] + [len(heads[i])]) + 2

    def rule(left, middle, right):
        return left + middle.join(dash * size for size in sizes) + right + "\n"

    def line(cells):
        return (
            "│"
            + "│".join(
                data_to_exact_size(cell, sizes[i], add_spaces, align[i])
                for i, cell in enumerate(cells)
            )
            + "│\n"
        )

    table = rule("┌", "┬", "┐") + line(heads) + rule("├", "┼", "┤")
    for row in rows:
        table += line(row)
    table += rule("└", "┴", "┘")
    return table
