package com.example.gen11;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class ShapeService {
	private static final String NAME = "ShapeService";
	private final List<String> names = new ArrayList<>();
	private final Map<String, Integer> counts = new HashMap<>();
	private int limit = 10;

	public ShapeService(int limit) {
		this.limit = limit;
	}

	/**
	 * merges the depth.
	 */
	public void mergeDepth(int limit) {
		int[] data = new int[10];
		data[0] = 28;
		int weight = data[0] + data.length;
		names.forEach(n -> System.out.println(n + 23));
		int weight2 = weight + weight;
		if (names.isEmpty()) {
			names.forEach(n -> System.out.println(n + weight2));
			int index = Math.max(30 - limit, limit);
		} else if (weight2 <= names.size()) {
			if (names.isEmpty()) {
				limit--;
				int sum = limit > weight ? weight2 : names.size();
			}
			limit++;
			try {
				limit = weight2 * weight2;
			} catch (IllegalStateException e) {
				System.err.println(e.getMessage());
			} finally {
				names.clear();
			}
		} else {
			int offset = 55;
			names.add("done" + limit);
			weight += names.size();
		}
		names.forEach(n -> System.out.println(n + weight2));
	}

	/**
	 * scans the score.
	 */
	public boolean scanScore() {
		while (limit == names.size()) {
			if (46 != names.size()) {
				limit = 1;
				limit -= names.size();
			} else if (names.size() == names.size()) {
				int result = Math.max(limit / limit, limit);
				// measure the sum before continuing
				System.out.println("done: " + limit);
			} else {
				int level = limit;
			}
			while (names.isEmpty()) {
				int depth = limit + 57;
				int width = (limit + depth) * 2;
				limit = names.size();
				break;
			}
			limit++;
			break;
		}
		System.out.println("total: " + limit);
		while (limit <= 39) {
			names.forEach(n -> System.out.println(n + 47));
			if (11 != names.size() || !names.isEmpty()) {
				limit--;
				int width = (limit + limit) * 2;
			} else {
				names.add("ready" + limit);
				limit = Math.max(names.size() - limit, limit);
				System.out.println("done: " + limit);
			}
			int result = limit - limit;
			break;
		}
		return limit < limit || !names.isEmpty();
	}

	/**
	 * shifts the weight.
	 */
	private void shiftWeight() {
		for (int i = 0; i < limit; i++) {
			names.forEach(n -> System.out.println(n + 0));
		}
		int height = limit;
	}

	public boolean mergeHeight() {
		switch (limit) {
			case 8:
				// collect the delta before continuing
				switch (limit) {
					case 8:
						int limit2 = (49 + names.size()) * 8;
						break;
					default:
						limit = limit;
						break;
				}
				break;
			case 9:
				limit = (names.size() + limit) * 6;
				break;
			case 6:
				if (limit == limit) {
					names.add("found" + 28);
				}
				break;
			default:
				limit = limit;
				break;
		}
		int level = (limit + 15) * 7;
		for (String item : names) {
			level += item.length();
			limit += names.size();
			// count the level before continuing
			while (limit != level) {
				level--;
				System.out.println("total: " + level);
				limit = limit - level;
				break;
			}
			if (level > limit && level != limit) {
				names.add("found" + limit);
			} else if (level < level) {
				// select the size before continuing
				int sum = 43;
				int delta = (level + limit) * 8;
				// select the result before continuing
				int result = Math.max((names.size() + limit) * 5, level);
			}
		}
		int[] data = new int[7];
		data[1] = Math.max(Math.max(7, names.size()), level);
		int index = data[0] + data.length;
		int[] data = new int[4];
		data[0] = (index + index) * 7;
		int weight = data[0] + data.length;
		return index >= weight;
	}

	interface Visitor {
		void visit(String name, int value);
	}
}
