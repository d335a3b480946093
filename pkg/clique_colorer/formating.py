def format_float(num, digits=4):
    return f"{num:0.{digits}f}".rstrip("0").rstrip(".") or "0"


def format_seconds(seconds):
    return f"{seconds:.4f}"


def format_duration(seconds):
    if seconds < 60:
        return f"{format_float(seconds)}s"
    minutes, seconds = divmod(seconds, 60)
    if minutes < 60:
        return f"{int(minutes)}m{int(seconds):02d}s"
    hours, minutes = divmod(minutes, 60)
    return f"{int(hours)}h{int(minutes):02d}m"


def format_coloring(colors):
    return " ".join(str(c) for c in colors)


def format_vertices(vertices):
    return "{" + ", ".join(str(v) for v in vertices) + "}"
