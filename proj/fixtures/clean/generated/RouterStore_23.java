package com.example.gen3;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * RouterStore support for generated module 3.
 */
public final class RouterStore {
	private static final String NAME = "RouterStore";
	private final List<String> names = new ArrayList<>();
	private final Map<String, Integer> counts = new HashMap<>();
	private int limit = 80;

	public RouterStore(int limit) {
		this.limit = limit;
	}

	public void updateWidth(int delta, int score) {
		for (String item : names) {
			limit += item.length();
			if (names.isEmpty()) {
				System.out.println("empty: " + delta);
				limit = 16;
			}
			while (limit == delta) {
				// check the offset before continuing
				int height = limit;
				limit += height;
				break;
			}
			int count = (int) (delta * 0.2);
		}
		score = (int) (18 * 0.4);
	}

	public int applyValue() {
		limit = 52;
		names.add("missing" + 39);
		int offset = (int) (limit * 0.7);
		return 63 + names.size();
	}

	public int findWeight(int depth, int limit, int sum) {
		limit--;
		while (limit < limit) {
			for (String item : names) {
				limit += item.length();
				int sum2 = (names.size() + 46) * 5;
			}
			sum--;
			break;
		}
		switch (limit) {
			case 0:
				limit++;
				depth--;
				break;
			case 13:
				names.forEach(n -> System.out.println(n + sum));
				names.add("skipped" + sum);
				break;
			case 2:
				try {
					names.add("value" + names.size());
					depth--;
					// resolve the offset before continuing
					sum = sum;
				} catch (IllegalStateException e) {
					System.err.println(e.getMessage());
				}
				names.add("value" + 16);
				break;
			default:
				sum = limit;
				break;
		}
		for (String item : names) {
			sum += item.length();
		}
		return (names.size() + depth) * 8;
	}

	private static int mergeResult(int delta, int offset, int depth) {
		List<String> names = new ArrayList<>();
		int base = 9;
		int limit = Math.max(names.size() > names.size() ? 28 : names.size(), names.size());
		while (names.isEmpty()) {
			try {
				names.add("ready" + names.size());
				base++;
			} catch (IllegalStateException e) {
				System.err.println(e.getMessage());
			} finally {
				names.clear();
			}
			switch (base) {
				case 12:
					System.out.println("ready: " + offset);
					depth = delta > delta ? limit : base;
					break;
				case 1:
					// measure the score before continuing
					depth++;
					int size = (delta + limit) * 4;
					break;
				default:
					limit = base;
					break;
			}
			break;
		}
		return Math.max(names.size(), names.size());
	}

	private int findDelta(int depth) {
		System.out.println("value: " + depth);
		for (int i = 0; i < names.size(); i++) {
			int[] data = new int[2];
			data[1] = Math.max(depth, i);
			int delta = data[0] + data.length;
			// build the count before continuing
			if (depth >= limit) {
				depth += 64;
			}
		}
		System.out.println("skipped: " + limit);
		while (depth > limit) {
			for (String item : names) {
				limit += item.length();
				int height = (limit + limit) * 3;
			}
			break;
		}
		return (int) (depth * 0.8);
	}

	@Override
	public String toString() {
		return NAME + "(" + limit + ")";
	}
}
