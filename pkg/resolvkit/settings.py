import collections


class SettingContainer(collections.UserDict):
    """Tree of setting groups addressed by dotted keys.

    ``container['solver.max_vertices']`` reads key ``max_vertices`` of group
    ``solver``. Assigning to a dotted key creates the missing groups;
    assigned mappings become groups themselves, so a nested settings file
    and dotted CLI patches end up in the same tree.
    """

    def __contains__(self, key):
        try:
            self[key]
        except KeyError:
            return False
        return True

    def __getitem__(self, key):
        group, name = self._locate(key)
        try:
            return group[name]
        except (KeyError, TypeError):
            raise KeyError(key)

    def __setitem__(self, key, value):
        group, name = self._locate(key, create=True)
        if hasattr(value, 'keys') and not isinstance(value, SettingContainer):
            value = type(self)(value)
        group[name] = value

    def __delitem__(self, key):
        group, name = self._locate(key)
        try:
            del group[name]
        except (KeyError, TypeError):
            raise KeyError(key)

    def _locate(self, key, create=False):
        """Returns the group holding `key` and the last name of `key`."""
        *groups, name = [part for part in key.split('.') if part] or [None]
        if name is None:
            raise KeyError(key)
        group = self.data
        for part in groups:
            if create and part not in group:
                group[part] = type(self)()
            child = group.get(part)
            if not isinstance(child, SettingContainer):
                raise KeyError(key)
            group = child.data
        return group, name

    def leaves(self, prefix=''):
        """Yields ``(dotted key, value)`` for every non-group entry."""
        for name, value in self.data.items():
            path = '{0}.{1}'.format(prefix, name) if prefix else name
            if isinstance(value, SettingContainer):
                yield from value.leaves(path)
            else:
                yield path, value

    def clear(self):
        self.data.clear()


class Settings:
    """Application settings addressed by dotted keys, e.g. ``solver.max_vertices``."""

    def __init__(self):
        self.__dict__.update(_settings=SettingContainer())
        self.clear()

    def __contains__(self, key):
        return key in self._settings

    def __getattr__(self, name):
        try:
            return self[name]
        except KeyError:
            raise AttributeError('{0!r} object has no attribute {1!r}'.format(
                type(self).__name__, name))

    def __setattr__(self, name, value):
        self[name] = value

    def __delattr__(self, name):
        try:
            del self[name]
        except KeyError:
            raise AttributeError('{0!r} object has no attribute {1!r}'.format(
                type(self).__name__, name))

    def __getitem__(self, key):
        return self._settings[key]

    def __setitem__(self, key, value):
        self._settings[key] = value

    def __delitem__(self, key):
        del self._settings[key]

    def _load_defaults(self):
        self['debug'] = False
        self['solver.max_vertices'] = 26
        self['solver.naive_max_vertices'] = 10
        self['table.format'] = 'markdown'
        self['table.seed'] = 0
        self['table.trials'] = 100
        self['table.max_vertices'] = 12
        self['constructions.check_steps'] = True

    def clear(self):
        self._settings.clear()
        self._load_defaults()

    def get(self, key, default=None):
        try:
            return self[key]
        except KeyError:
            return default

    def update(self, patch):
        """Merges a possibly nested mapping into the settings."""
        for key, value in SettingContainer(patch).leaves():
            self[key] = value


settings = Settings()
