import os


class Project:
    """Provides information about this library."""

    # The cached return value of root_dir()
    _root_dir = None

    @staticmethod
    def root_dir():
        """Return the root directory of the package."""
        if Project._root_dir is None:
            Project._root_dir = os.path.dirname(
                os.path.dirname(os.path.abspath(__file__)))
        return Project._root_dir

    @staticmethod
    def assets_dir():
        """Return the root directory of the asset files."""
        return os.path.join(Project.root_dir(), 'assets')

    @staticmethod
    def scenarios_dir():
        """Return the directory containing the bundled scenario files."""
        return os.path.join(Project.assets_dir(), 'scenarios')

    @staticmethod
    def scenario_file(name):
        """Return the path of a bundled scenario, e.g. ``'grid5x5'``.

        ``name`` may also be a path to an existing file, in which case we
        return it unchanged.
        """
        if os.path.exists(name):
            return name
        filename = name if name.endswith('.toml') else name + '.toml'
        return os.path.join(Project.scenarios_dir(), filename)

    @staticmethod
    def bundled_scenarios():
        """Return the names of the bundled scenarios, sorted."""
        return sorted(
            os.path.splitext(filename)[0]
            for filename in os.listdir(Project.scenarios_dir())
            if filename.endswith('.toml'))
