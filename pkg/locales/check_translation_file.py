import os
import re
import sys

import click
import yaml

KEY_PATTERN = re.compile(r"i18n\.t\(\s*(['\"])([a-z0-9_.]+)\1")
PACKAGE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "clique_colorer")


def flatten_keys(pre, d):
    keys = []
    for k in d:
        new_pre = str(k) if pre == "" else pre + "." + str(k)
        if isinstance(d[k], dict):
            keys += flatten_keys(new_pre, d[k])
        else:
            keys.append(new_pre)
    return keys


def missing_keys(translation, package_dir=PACKAGE_DIR):
    """
    Translation keys used in the package but absent from translation,
    grouped by source file
    """
    known = set(flatten_keys("", translation or {}))
    missing = {}
    for filename in sorted(os.listdir(package_dir)):
        full_path = os.path.join(package_dir, filename)
        if not filename.endswith(".py") or not os.path.isfile(full_path):
            continue
        with open(full_path, "r") as f:
            content = f.read()
        absent = sorted({m.group(2) for m in KEY_PATTERN.finditer(content)} - known)
        if absent:
            missing[filename] = absent
    return missing


@click.command()
@click.argument("translation_file")
@click.option("--package-dir", default=PACKAGE_DIR, help="Package sources to scan.")
def main(translation_file, package_dir):
    """
    Check the translation file you want by
    reading all the translation keys used
    in the program and checking their existence
    in the given file
    """
    with open(translation_file, "r") as f:
        translation = yaml.safe_load(f)

    missing = missing_keys(translation, package_dir)
    if not missing:
        click.echo("No missing keys!")
        return
    click.echo(f"Missing keys in '{translation_file}' from :")
    for filename, keys in missing.items():
        click.echo(f"\t{filename} :")
        for key in keys:
            click.echo(f"\t\t{key}")
    sys.exit(1)


if __name__ == "__main__":
    main()
