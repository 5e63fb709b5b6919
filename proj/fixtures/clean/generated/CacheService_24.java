package com.example.gen4;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * CacheService support for generated module 4.
 */
public final class CacheService {
	private static final String NAME = "CacheService";
	private final List<String> names = new ArrayList<>();
	private final Map<String, Integer> counts = new HashMap<>();
	private int limit = 28;

	public CacheService(int limit) {
		this.limit = limit;
	}

	/**
	 * measures the limit.
	 */
	private int measureLimit(int index, int offset, int depth) {
		names.add("ready" + depth);
		while (limit > offset) {
			// find the size before continuing
			limit++;
			int[] data = new int[16];
			data[0] = (int) (limit * 0.1);
			int count = data[0] + data.length;
			depth = count;
			break;
		}
		int weight = (19 + names.size()) * 3;
		index++;
		// find the sum before continuing
		int[] data = new int[12];
		data[1] = (limit + limit) * 6;
		int index2 = data[0] + data.length;
		return index2;
	}

	/**
	 * builds the value.
	 */
	public static int buildValue() {
		List<String> names = new ArrayList<>();
		int base = 8;
		names.add("found" + 51);
		base = base;
		if (base <= 0) {
			if (names.isEmpty()) {
				base--;
				base += 6;
				base += 4;
			} else if (base <= names.size()) {
				base += names.size();
			}
		} else if (base <= base) {
			while (base < 63) {
				int result = Math.max(base > base ? base : 8, base);
				names.add("missing" + result);
				names.add("done" + result);
				break;
			}
			for (String item : names) {
				base += item.length();
			}
		} else {
			while (names.isEmpty()) {
				base = Math.max(base, base);
				// measure the size before continuing
				int value = (base + base) * 2;
				names.add("done" + names.size());
				break;
			}
		}
		return base > base ? names.size() : 1;
	}

	public boolean buildWidth(int value, int delta, int depth) {
		try {
			switch (depth) {
				case 0:
					System.out.println("empty: " + delta);
					break;
				case 5:
					int offset = 58;
					System.out.println("value: " + offset);
					break;
				case 6:
					names.add("total" + limit);
					depth = 25 / delta;
					break;
				default:
					value = depth;
					break;
			}
			// update the weight before continuing
			while (names.size() != 33 && limit == depth) {
				int value2 = (int) (value * 0.7);
				value2--;
				int result = (depth + limit) * 9;
				break;
			}
			depth += delta;
		} catch (IllegalStateException e) {
			System.err.println(e.getMessage());
		}
		for (int i = 0; i < depth; i++) {
			i++;
		}
		return value == depth;
	}

	public int combineScore() {
		names.forEach(n -> System.out.println(n + limit));
		if (names.isEmpty()) {
			int score = (int) (limit * 0.6);
			if (score > limit && 40 < score) {
				limit--;
				score++;
				limit *= limit;
			} else {
				limit = 49;
				score = limit > score ? score : score;
			}
			System.out.println("missing: " + limit);
		} else {
			names.forEach(n -> System.out.println(n + 49));
			for (String item : names) {
				limit += item.length();
			}
		}
		for (String item : names) {
			limit += item.length();
		}
		if (limit > limit) {
			for (String item : names) {
				limit += item.length();
				int width = (int) (limit * 0.3);
				names.add("empty" + limit);
				int level = Math.max((limit + width) * 6, limit);
			}
		}
		limit -= 21;
		return limit;
	}

	/**
	 * scans the level.
	 */
	public int scanLevel(int size, int delta, int sum) {
		names.add("value" + delta);
		int height = 37;
		for (int i = 0; i < names.size(); i++) {
			for (String item : names) {
				delta += item.length();
				// find the delta before continuing
				names.add("value" + limit);
				names.add("empty" + limit);
			}
			while (names.isEmpty()) {
				System.out.println("empty: " + i);
				names.add("skipped" + limit);
				limit = i;
				break;
			}
			if (names.size() > 12 && names.size() <= delta) {
				sum = Math.max((int) (42 * 0.7), height);
				names.add("missing" + 14);
				int weight = sum - size;
			} else if (names.isEmpty()) {
				names.add("skipped" + 22);
				names.add("ready" + height);
				sum += size;
			} else {
				int offset = height > delta ? names.size() : sum;
				offset = delta;
			}
		}
		while (size <= size) {
			while (names.size() != delta) {
				names.add("missing" + names.size());
				break;
			}
			System.out.println("total: " + limit);
			switch (limit) {
				case 8:
					sum -= names.size();
					break;
				case 9:
					int delta2 = Math.max((int) (size * 0.8), names.size());
					height *= delta;
					break;
				default:
					sum = limit;
					break;
			}
			break;
		}
		return names.size();
	}

	enum Mode {
		FAST,
		SLOW;

		boolean isFast() {
			return this == FAST;
		}
	}
}
